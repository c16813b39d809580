use weyl_lc::cohomology::{
    cohomological_dimension, iterated_local_cohomology, lambda, local_cohomology, relative_cd, CechComplex,
};
use weyl_lc::groebner::ideal_basis;
use weyl_lc::localize::Context;
use weyl_lc::{Operator, Order, Ring, Vector};

fn coords(n: usize, c: usize) -> Vec<Operator> {
    let r = Ring::weyl(n);
    (0..c).map(|i| Operator::x(r, i)).collect()
}

fn gb_of(ops: &[Operator]) -> Vec<Vector> {
    let o = Order::degrevlex(ops[0].ring());
    ideal_basis(ops, &o).unwrap().elements().to_vec()
}

/// `H^c` of the ideal of the first `c` coordinates: `A / (x_1..x_c, d_{c+1}..d_n)`.
fn expected_top(n: usize, c: usize) -> Vec<Vector> {
    let r = Ring::weyl(n);
    let mut g = coords(n, c);
    g.extend((c..n).map(|i| Operator::d(r, i)));
    gb_of(&g)
}

#[test]
fn coordinate_ideals() {
    let ctx = Context::default();
    for (n, c) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        let fs = coords(n, c);
        for k in -1..=(c as i64 + 1) {
            let h = local_cohomology(&fs, k, &ctx).unwrap();
            if k == c as i64 {
                assert_eq!(h.presentation.rank(), 1, "n={n} c={c}");
                assert_eq!(h.presentation.gb().elements(), expected_top(n, c).as_slice(), "n={n} c={c}");
                assert_eq!(h.a, -1);
            } else {
                assert!(h.is_zero(), "H^{k} for n={n} c={c}");
            }
        }
    }
}

#[test]
fn principal_hypersurface() {
    let r = Ring::weyl(2);
    let f = Operator::x(r, 0).pow(2).add(&Operator::x(r, 1).pow(2)).unwrap();
    let ctx = Context::default();
    assert!(local_cohomology(&[f.clone()], 0, &ctx).unwrap().is_zero());
    let h1 = local_cohomology(&[f.clone()], 1, &ctx).unwrap();
    assert!(!h1.is_zero());
    // H^1 = R_f / R; the class of f^-1 is a generator killed by f
    let o = h1.presentation.order().clone();
    let fv = f.to_primitive_int(&o);
    assert!(h1.presentation.is_zero_element(&fv));
    assert_eq!(cohomological_dimension(&[f], &ctx).unwrap(), Some(1));
}

#[test]
fn single_shot_agrees() {
    let mut ctx = Context::default();
    ctx.single_shot = true;
    let h = local_cohomology(&coords(2, 2), 2, &ctx).unwrap();
    assert_eq!(h.presentation.gb().elements(), expected_top(2, 2).as_slice());
    assert!(local_cohomology(&coords(2, 2), 1, &ctx).unwrap().is_zero());
}

#[test]
fn iterated_cohomology() {
    let ctx = Context::default();
    let h = iterated_local_cohomology(&coords(1, 1), 0, 1, &ctx).unwrap();
    assert_eq!(h.presentation.gb().elements(), expected_top(1, 1).as_slice());

    let h = iterated_local_cohomology(&coords(2, 2), 0, 2, &ctx).unwrap();
    assert_eq!(h.presentation.gb().elements(), expected_top(2, 2).as_slice());
    assert!(iterated_local_cohomology(&coords(2, 2), 0, 3, &ctx).unwrap().is_zero());
    assert!(iterated_local_cohomology(&coords(2, 2), 3, 0, &ctx).unwrap().is_zero());

    // (x1) in two variables: H^1 = E_1 (x) K[x2], and H^1_m of it is E
    let h = iterated_local_cohomology(&coords(2, 1), 1, 1, &ctx).unwrap();
    assert!(!h.is_zero());
    assert!(iterated_local_cohomology(&coords(2, 1), 0, 1, &ctx).unwrap().is_zero());
}

#[test]
fn lyubeznik_numbers_of_a_point() {
    let ctx = Context::default();
    let fs = coords(2, 2);
    for i in 0..=2 {
        for j in 0..=2 {
            let want = usize::from((i, j) == (0, 2));
            assert_eq!(lambda(&fs, i, j, &ctx).unwrap(), want, "lambda at ({i},{j})");
        }
    }
}

#[test]
fn lyubeznik_numbers_of_a_line() {
    // I = (x1) in K[x1, x2]: only lambda_{1,1} = H^1_m(H^1_I) is nonzero
    let ctx = Context::default();
    let fs = coords(2, 1);
    for i in 0..=2 {
        for j in 0..=1 {
            let want = usize::from((i, j) == (1, 1));
            assert_eq!(lambda(&fs, i, j, &ctx).unwrap(), want, "lambda at ({i},{j})");
        }
    }
}

#[test]
fn dimensions() {
    let ctx = Context::default();
    assert_eq!(cohomological_dimension(&coords(1, 1), &ctx).unwrap(), Some(1));
    assert_eq!(cohomological_dimension(&coords(2, 2), &ctx).unwrap(), Some(2));

    let r = relative_cd(&coords(2, 2), 1, &ctx).unwrap();
    assert_eq!((r.cd, r.relative), (Some(2), 1));
    assert_eq!(r.shifted_nonvanishing, vec![1]);
    assert!(r.warning.is_none());
    assert_eq!(relative_cd(&coords(2, 2), 0, &ctx).unwrap().relative, 2);
    let r = relative_cd(&coords(2, 2), 3, &ctx).unwrap();
    assert_eq!(r.relative, 0);
    assert!(r.warning.is_some());
}

#[test]
fn complex_squares_to_zero() {
    let ctx = Context::default();
    let r = Ring::weyl(2);
    let fs = vec![Operator::x(r, 0), Operator::x(r, 0).add(&Operator::x(r, 1).pow(2)).unwrap()];
    let cx = CechComplex::build(&fs, &[(0, 0), (0, 1), (0, 2)], &ctx).unwrap();
    cx.check_invariants().unwrap();
    let all: Vec<(usize, usize)> = (0..=2).flat_map(|i| (0..=2).map(move |j| (i, j))).collect();
    let cx = CechComplex::build(&coords(2, 2), &all, &ctx).unwrap();
    cx.check_invariants().unwrap();
}

#[test]
fn bad_generators() {
    let ctx = Context::default();
    let r = Ring::weyl(1);
    assert!(local_cohomology(&[], 1, &ctx).is_err());
    assert!(local_cohomology(&[Operator::d(r, 0)], 1, &ctx).is_err());
    assert!(local_cohomology(&[Operator::zero(r)], 1, &ctx).is_err());
}
