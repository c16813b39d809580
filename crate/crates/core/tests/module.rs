use weyl_lc::groebner::ideal_basis;
use weyl_lc::module::{intersect, subquotient, unit, ModuleMap, Presentation};
use weyl_lc::{GbOptions, GroebnerBasis, Operator, Order, Ring, Vector};

fn opts() -> GbOptions {
    GbOptions::default()
}

fn iv(p: &Operator, o: &Order) -> Vector {
    p.to_primitive_int(o)
}

fn cyclic(o: &Order, gens: &[Operator]) -> Presentation {
    Presentation::cyclic(o, gens, &opts()).unwrap()
}

fn same_ideal(a: &[Vector], b: &[Vector], o: &Order) -> bool {
    let (ga, gb) = (GroebnerBasis::compute(a, o).unwrap(), GroebnerBasis::compute(b, o).unwrap());
    a.iter().all(|v| gb.is_member(v)) && b.iter().all(|v| ga.is_member(v))
}

#[test]
fn kernel_of_identity_is_relations() {
    let r = Ring::weyl(1);
    let o = Order::degrevlex(r);
    let m = cyclic(&o, &[Operator::x(r, 0)]);
    let map = ModuleMap::new(Presentation::free(&o, 1), m, vec![unit(0)]).unwrap();
    let k = map.kernel(&opts()).unwrap();
    assert!(same_ideal(&k, &[iv(&Operator::x(r, 0), &o)], &o));
}

#[test]
fn kernel_onto_quotient() {
    let r = Ring::weyl(1);
    let o = Order::degrevlex(r);
    let d = Operator::d(r, 0);
    let map = ModuleMap::new(Presentation::free(&o, 1), cyclic(&o, &[d.clone()]), vec![unit(0)]).unwrap();
    assert!(same_ideal(&map.kernel(&opts()).unwrap(), &[iv(&d, &o)], &o));
}

#[test]
fn right_multiplication_by_x_on_polynomials() {
    // A_1/(d) is K[x]; 1 -> x is not compatible with the relation d, since
    // d*x = x*d + 1.
    let r = Ring::weyl(1);
    let o = Order::degrevlex(r);
    let (x, d) = (Operator::x(r, 0), Operator::d(r, 0));
    let poly = cyclic(&o, &[d.clone()]);
    assert!(ModuleMap::new(poly.clone(), poly.clone(), vec![iv(&x, &o)]).is_err());

    // From the free module it is fine: the kernel is ann(x) = (d^2, x*d - 1).
    let map = ModuleMap::new(Presentation::free(&o, 1), poly, vec![iv(&x, &o)]).unwrap();
    let k = map.kernel(&opts()).unwrap();
    let want = [iv(&d.pow(2), &o), iv(&x.multiply(&d).unwrap().sub(&Operator::one(r)).unwrap(), &o)];
    assert!(same_ideal(&k, &want, &o));
}

#[test]
fn preimages() {
    let r = Ring::weyl(1);
    let o = Order::degrevlex(r);
    let (x, d) = (Operator::x(r, 0), Operator::d(r, 0));
    let xd = x.multiply(&d).unwrap();
    let map = ModuleMap::new(Presentation::free(&o, 1), cyclic(&o, &[xd.clone()]), vec![unit(0)]).unwrap();
    let pre = map.preimage(&[iv(&x, &o)], &opts()).unwrap();
    assert!(same_ideal(&pre, &[iv(&x, &o), iv(&xd, &o)], &o));

    let all = map.preimage(&[unit(0)], &opts()).unwrap();
    assert!(GroebnerBasis::compute(&all, &o).unwrap().contains_unit(0));
    let none = map.preimage(&[], &opts()).unwrap();
    assert!(same_ideal(&none, &map.kernel(&opts()).unwrap(), &o));
}

#[test]
fn intersections() {
    let r = Ring::weyl(1);
    let o = Order::degrevlex(r);
    let free = Presentation::free(&o, 1);
    let (x, d) = (iv(&Operator::x(r, 0), &o), iv(&Operator::d(r, 0), &o));
    let m = [x.clone(), iv(&Operator::d(r, 0).pow(2), &o)];
    assert!(same_ideal(&intersect(&free, &m, &m, &opts()).unwrap(), &m, &o));
    assert!(intersect(&free, &m, &[], &opts()).unwrap().is_empty());

    let a = intersect(&free, &[x.clone()], &[d.clone()], &opts()).unwrap();
    let b = intersect(&free, &[d.clone()], &[x.clone()], &opts()).unwrap();
    assert!(!a.is_empty());
    assert!(same_ideal(&a, &b, &o));
    let (gx, gd) = (GroebnerBasis::compute(&[x], &o).unwrap(), GroebnerBasis::compute(&[d], &o).unwrap());
    assert!(a.iter().all(|v| gx.is_member(v) && gd.is_member(v)));
}

#[test]
fn subquotients() {
    let n = 3;
    let r = Ring::weyl(n);
    let o = Order::degrevlex(r);
    let free = Presentation::free(&o, 1);
    let xs: Vec<Vector> = (0..n).map(|i| iv(&Operator::x(r, i), &o)).collect();
    let sq = subquotient(&[unit(0)], &xs, &free, &opts()).unwrap();
    assert_eq!(sq.presentation.rank(), 1);
    assert!(same_ideal(sq.presentation.gb().elements(), &xs, &o));
    assert!(!sq.is_zero_module());

    assert!(subquotient(&xs, &xs, &free, &opts()).unwrap().is_zero_module());

    let g = [iv(&Operator::d(r, 0), &o)];
    let sq = subquotient(&g, &[], &free, &opts()).unwrap();
    assert_eq!(sq.generators, g.to_vec());
    assert!(sq.presentation.relations().is_empty() || !sq.is_zero_module());
}

#[test]
fn zero_module_tests() {
    let r = Ring::weyl(2);
    let o = Order::degrevlex(r);
    assert!(Presentation::free(&o, 0).is_zero_module());
    assert!(!cyclic(&o, &[Operator::x(r, 0), Operator::x(r, 1)]).is_zero_module());
    assert!(cyclic(&o, &[Operator::one(r)]).is_zero_module());
    assert!(cyclic(&o, &[Operator::x(r, 0), Operator::d(r, 0)]).is_zero_module());
}

#[test]
fn ideal_and_cyclic_agree() {
    let r = Ring::weyl(2);
    let o = Order::degrevlex(r);
    let gens = [Operator::x(r, 0).multiply(&Operator::d(r, 1)).unwrap(), Operator::d(r, 0)];
    let p = cyclic(&o, &gens);
    assert_eq!(p.gb().elements(), ideal_basis(&gens, &o).unwrap().elements());
}
