use num_bigint::BigInt;
use weyl_lc::bfunction::{
    annihilator_fs, bernstein_polynomial, delta, integer_roots, malgrange_ideal, min_integer_root, root_bound,
    BernsteinData,
};
use weyl_lc::groebner::ideal_basis;
use weyl_lc::{apply_to_fs, FsExpr, GbOptions, Operator, Order, Rat, Ring};

fn q(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

fn sum_of_squares(r: Ring) -> Operator {
    Operator::x(r, 0).pow(2).add(&Operator::x(r, 1).pow(2)).unwrap()
}

fn kills_fs(p: &Operator, f: &Operator) -> bool {
    apply_to_fs(p, &FsExpr::fs(f.ring().n()), f).unwrap().is_zero()
}

fn s_poly(coeffs: &[i64], n: usize) -> Operator {
    BernsteinData::new(coeffs.iter().map(|&c| q(c, 1)).collect()).to_operator(n)
}

#[test]
fn malgrange_generators() {
    let r = Ring::weyl(2);
    let rt = Ring::with_t(2);
    let got = malgrange_ideal(&Operator::x(r, 0), &delta(2)).unwrap();
    let want = vec![
        Operator::t(rt).sub(&Operator::x(rt, 0)).unwrap(),
        Operator::d(rt, 0).add(&Operator::dt(rt)).unwrap(),
        Operator::d(rt, 1),
    ];
    assert_eq!(got, want);

    let got = malgrange_ideal(&sum_of_squares(r), &delta(2)).unwrap();
    let two_dt = |i| Operator::from_int(rt, 2).multiply(&Operator::x(rt, i)).unwrap().multiply(&Operator::dt(rt)).unwrap();
    let want = vec![
        Operator::t(rt).sub(&sum_of_squares(rt)).unwrap(),
        Operator::d(rt, 0).add(&two_dt(0)).unwrap(),
        Operator::d(rt, 1).add(&two_dt(1)).unwrap(),
    ];
    assert_eq!(got, want);
}

#[test]
fn annihilator_of_coordinate() {
    for n in 1..=2 {
        let r = Ring::weyl(n);
        let rs = Ring::with_s(n);
        let f = Operator::x(r, 0);
        let ann = annihilator_fs(&f, &delta(n), &GbOptions::default()).unwrap();
        for g in &ann.gens {
            assert!(kills_fs(g, &f), "{g}");
        }
        let mut want = vec![Operator::x(rs, 0).multiply(&Operator::d(rs, 0)).unwrap().sub(&Operator::s(rs)).unwrap()];
        want.extend((1..n).map(|i| Operator::d(rs, i)));
        let o = Order::degrevlex(rs);
        assert_eq!(ideal_basis(&ann.gens, &o).unwrap().elements(), ideal_basis(&want, &o).unwrap().elements());
    }
}

#[test]
fn annihilator_of_sum_of_squares() {
    let r = Ring::weyl(2);
    let rs = Ring::with_s(2);
    let f = sum_of_squares(r);
    let ann = annihilator_fs(&f, &delta(2), &GbOptions::default()).unwrap();
    for g in &ann.gens {
        assert!(kills_fs(g, &f), "{g}");
    }
    let xd = |i, j| Operator::x(rs, i).multiply(&Operator::d(rs, j)).unwrap();
    let rotation = xd(0, 1).sub(&xd(1, 0)).unwrap();
    let euler = xd(0, 0).add(&xd(1, 1)).unwrap().sub(&Operator::from_int(rs, 2).multiply(&Operator::s(rs)).unwrap()).unwrap();
    assert!(kills_fs(&rotation, &f) && kills_fs(&euler, &f));
    let gb = ideal_basis(&ann.gens, &Order::degrevlex(rs)).unwrap();
    let o = gb.order().clone();
    assert!(gb.is_member(&rotation.to_primitive_int(&o)));
    assert!(gb.is_member(&euler.to_primitive_int(&o)));
}

#[test]
fn functional_equations_by_differentiation() {
    // (d1^2 + d2^2) f^(s+1) = 4 (s+1)^2 f^s and d1 d2 (x1 x2)^(s+1) = (s+1)^2 (x1 x2)^s
    let r = Ring::weyl(2);
    let rs = Ring::with_s(2);
    let sq = s_poly(&[1, 2, 1], 2);
    let f = sum_of_squares(r);
    let lap = Operator::d(r, 0).pow(2).add(&Operator::d(r, 1).pow(2)).unwrap();
    let out = apply_to_fs(&lap, &FsExpr::new(&f, 0).unwrap(), &f).unwrap();
    let four = Operator::from_int(rs, 4).multiply(&sq).unwrap();
    assert!(out.same_value(&FsExpr::new(&four, 0).unwrap(), &f).unwrap());

    let g = Operator::x(r, 0).multiply(&Operator::x(r, 1)).unwrap();
    let mixed = Operator::d(r, 0).multiply(&Operator::d(r, 1)).unwrap();
    let out = apply_to_fs(&mixed, &FsExpr::new(&g, 0).unwrap(), &g).unwrap();
    assert!(out.same_value(&FsExpr::new(&sq, 0).unwrap(), &g).unwrap());
}

#[test]
fn bernstein_polynomials() {
    let opts = GbOptions::default();
    let r1 = Ring::weyl(1);
    let b = bernstein_polynomial(&Operator::x(r1, 0), &delta(1), &opts).unwrap();
    assert_eq!(b.b, vec![q(1, 1), q(1, 1)]);
    assert_eq!(b.render(), "s + 1");

    let r = Ring::weyl(2);
    let square = vec![q(1, 1), q(2, 1), q(1, 1)];
    let b = bernstein_polynomial(&sum_of_squares(r), &delta(2), &opts).unwrap();
    assert_eq!(b.b, square);
    let g = Operator::x(r, 0).multiply(&Operator::x(r, 1)).unwrap();
    let b = bernstein_polynomial(&g, &delta(2), &opts).unwrap();
    assert_eq!(b.b, square);
    assert_eq!(b.min_int_root, Some(-1));

    let b = bernstein_polynomial(&Operator::one(r), &delta(2), &opts).unwrap();
    assert_eq!(b.degree(), 0);
    assert_eq!(b.min_int_root, None);
}

#[test]
fn cusp_has_rational_roots() {
    // b(s) of x^2 + y^3 is (s+1)(s+5/6)(s+7/6)
    let r = Ring::weyl(2);
    let f = Operator::x(r, 0).pow(2).add(&Operator::x(r, 1).pow(3)).unwrap();
    let b = bernstein_polynomial(&f, &delta(2), &GbOptions::default()).unwrap();
    assert_eq!(b.degree(), 3);
    for root in [q(-1, 1), q(-5, 6), q(-7, 6)] {
        assert_eq!(b.eval(&root), q(0, 1), "{root}");
    }
    assert_eq!(b.int_roots, vec![-1]);
}

#[test]
fn integer_root_filtering() {
    let b = BernsteinData::new(vec![q(1, 1), q(1, 1)]);
    assert_eq!(min_integer_root(&b), Some(-1));
    let b = BernsteinData::new(vec![q(1, 1), q(2, 1), q(1, 1)]);
    assert_eq!(min_integer_root(&b), Some(-1));
    // (s+1)(s+5/2) = s^2 + 7/2 s + 5/2
    let coeffs = vec![q(5, 2), q(7, 2), q(1, 1)];
    let b = BernsteinData::new(coeffs.clone());
    assert_eq!(min_integer_root(&b), Some(-1));
    let bound = root_bound(&coeffs).ceil() as i64;
    for k in -2 * bound..=2 * bound {
        let v = b.eval(&q(k, 1));
        assert_eq!(v == q(0, 1), k == -1, "s = {k}");
    }
    // (s+2)(s+3)(s-1)
    let b = BernsteinData::new(vec![q(-6, 1), q(1, 1), q(4, 1), q(1, 1)]);
    assert_eq!(integer_roots(&b.b), vec![-3, -2, 1]);
    assert_eq!(BernsteinData::new(vec![q(1, 1), q(0, 1), q(1, 1)]).min_int_root, None);
}

#[test]
fn input_validation() {
    let r = Ring::weyl(1);
    let opts = GbOptions::default();
    assert!(annihilator_fs(&Operator::zero(r), &delta(1), &opts).is_err());
    assert!(annihilator_fs(&Operator::d(r, 0), &delta(1), &opts).is_err());
    assert!(annihilator_fs(&Operator::x(r, 0), &delta(2), &opts).is_err());
}
