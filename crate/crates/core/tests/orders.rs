use std::cmp::Ordering;

use weyl_lc::module::vector_from_ops;
use weyl_lc::{Mono, Operator, Order, OrderKind, Ring};

fn mono(r: Ring, pairs: &[(usize, u32)]) -> Mono {
    let mut e = vec![0u32; r.nslots()];
    for &(s, p) in pairs {
        e[s] = p;
    }
    Mono::from_exps(&e)
}

#[test]
fn degrevlex_ties_use_last_variable() {
    let r = Ring::weyl(1);
    let o = Order::degrevlex(r);
    let x2 = mono(r, &[(r.x(0), 2)]);
    let xd = mono(r, &[(r.x(0), 1), (r.d(0), 1)]);
    // equal degree; x1*dx1 has more of the last slot, so it is smaller
    assert_eq!(o.cmp(&x2, &xd), Ordering::Greater);
    assert_eq!(o.cmp(&xd, &mono(r, &[(r.x(0), 3)])), Ordering::Less);
    assert_eq!(o.cmp(&xd, &xd), Ordering::Equal);
}

#[test]
fn eliminate_y_puts_y_first() {
    let r = Ring::with_t_y(1);
    let o = Order::eliminate_y(r);
    let y1x = mono(r, &[(r.y1().unwrap(), 1), (r.x(0), 1)]);
    let t = mono(r, &[(r.t().unwrap(), 1)]);
    assert_eq!(o.cmp(&y1x, &t), Ordering::Greater);
    let big = mono(r, &[(r.t().unwrap(), 9), (r.d(0), 7)]);
    assert_eq!(o.cmp(&mono(r, &[(r.y2().unwrap(), 1)]), &big), Ordering::Greater);
}

#[test]
fn eliminate_xd_puts_s_last() {
    let r = Ring::with_s(1);
    let o = Order::eliminate_xd(r);
    let s3 = mono(r, &[(r.s().unwrap(), 3)]);
    assert_eq!(o.cmp(&s3, &mono(r, &[(r.x(0), 1)])), Ordering::Less);
    assert_eq!(o.cmp(&s3, &mono(r, &[(r.s().unwrap(), 2)])), Ordering::Greater);
}

#[test]
fn leading_terms() {
    let r = Ring::weyl(1);
    let o = Order::degrevlex(r);
    let p = Operator::x(r, 0).multiply(&Operator::d(r, 0)).unwrap().add(&Operator::one(r)).unwrap();
    assert_eq!(p.leading_term(&o).unwrap().1, mono(r, &[(r.x(0), 1), (r.d(0), 1)]));

    let ry = Ring::with_t_y(1);
    let oy = Order::eliminate_y(ry);
    let q = Operator::t(ry).sub(&Operator::y1(ry).multiply(&Operator::x(ry, 0)).unwrap()).unwrap();
    assert_eq!(q.leading_term(&oy).unwrap().1, mono(ry, &[(ry.y1().unwrap(), 1), (ry.x(0), 1)]));
    assert!(Operator::zero(r).leading_term(&o).is_err());
}

#[test]
fn module_order_breaks_ties_by_position() {
    let r = Ring::weyl(1);
    let o = Order::degrevlex(r);
    let v = vector_from_ops(&[Operator::d(r, 0), Operator::x(r, 0)], &o);
    // same degree: d1 < x1 in degrevlex, so x1 e_2 leads either way
    let lead = v.lead().unwrap();
    assert_eq!(lead.pos, 1);
    let x = mono(r, &[(r.x(0), 1)]);
    assert_eq!(o.cmp_term(&x, 1, &x, 0), Ordering::Greater);
    assert_eq!(o.cmp_term(&mono(r, &[(r.x(0), 2)]), 0, &x, 1), Ordering::Greater);
}

#[test]
fn split_block_ranks_below() {
    let r = Ring::weyl(1);
    let o = Order::degrevlex(r).with_split(1);
    let one = Mono::from_exps(&vec![0; r.nslots()]);
    let big = mono(r, &[(r.x(0), 5)]);
    assert_eq!(o.cmp_term(&one, 0, &big, 1), Ordering::Greater);
    assert_eq!(o.unsplit().cmp_term(&one, 0, &big, 1), Ordering::Less);
}

#[test]
fn constructor_checks() {
    assert!(Order::new(Ring::weyl(1), OrderKind::EliminateY).is_err());
    assert!(Order::new(Ring::weyl(1), OrderKind::EliminateXD).is_err());
    assert!(Order::new(Ring::weyl(1), OrderKind::Weighted(vec![1])).is_err());
    assert!(Order::new(Ring::weyl(1), OrderKind::Weighted(vec![1, 2])).is_ok());
}

#[test]
fn weighted_degree_first() {
    let r = Ring::weyl(1);
    let o = Order::new(r, OrderKind::Weighted(vec![1, 3])).unwrap();
    let x2 = mono(r, &[(r.x(0), 2)]);
    let d = mono(r, &[(r.d(0), 1)]);
    assert_eq!(o.cmp(&d, &x2), Ordering::Greater);
}

#[test]
fn pair_product_exceeds_one() {
    let r = Ring::with_t_y(2);
    let one = Mono::from_exps(&vec![0; r.nslots()]);
    for o in [Order::degrevlex(r), Order::eliminate_y(r)] {
        for (v, dv) in r.pairs() {
            let m = mono(r, &[(v, 1), (dv, 1)]);
            assert_eq!(o.cmp(&m, &one), Ordering::Greater);
        }
    }
}
