use weyl_lc::bfunction::{delta, BernsteinData};
use weyl_lc::localize::{BernsteinCache, Context};
use weyl_lc::{Operator, Ring};
use weyl_lc_cli::cache::DiskCache;

fn circle() -> Operator {
    let r = Ring::weyl(2);
    Operator::x(r, 0).pow(2).add(&Operator::x(r, 1).pow(2)).unwrap()
}

fn compute(f: &Operator) -> (Vec<Operator>, BernsteinData) {
    let (ann, b) = Context::default().bernstein_data(f, &delta(2)).unwrap();
    (ann.gens.clone(), b)
}

/// A new context each time, so the in-memory memo cannot answer.
fn fresh(dir: &std::path::Path) -> Context {
    let mut ctx = Context::default();
    ctx.cache = Some(std::sync::Arc::new(DiskCache::new(dir, "DegRevLex").unwrap()));
    ctx
}

fn only_entry(dir: &std::path::Path) -> std::path::PathBuf {
    let files: Vec<_> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1, "{files:?}");
    files[0].clone()
}

#[test]
fn store_then_load_is_identical() {
    let dir = tempfile::tempdir().unwrap();
    let c = DiskCache::new(dir.path(), "DegRevLex").unwrap();
    let f = circle();
    assert!(c.load(&f, &delta(2)).is_none());
    let (ann, b) = compute(&f);
    c.store(&f, &delta(2), &ann, &b);
    let (ann2, b2) = c.load(&f, &delta(2)).unwrap();
    assert_eq!(ann2, ann);
    assert_eq!(b2.b, b.b);
    assert_eq!(b2.min_int_root, Some(-1));
}

#[test]
fn hit_is_byte_identical_to_recomputation() {
    let dir = tempfile::tempdir().unwrap();
    let f = circle();
    let first = fresh(dir.path()).bernstein_data(&f, &delta(2)).unwrap();
    let path = only_entry(dir.path());
    let bytes = std::fs::read(&path).unwrap();
    let second = fresh(dir.path()).bernstein_data(&f, &delta(2)).unwrap();
    assert_eq!(first.0.gens, second.0.gens);
    assert_eq!(first.1.b, second.1.b);

    // recompute into a fresh directory and compare the files
    let other = tempfile::tempdir().unwrap();
    let c = DiskCache::new(other.path(), "DegRevLex").unwrap();
    let (ann, b) = compute(&f);
    c.store(&f, &delta(2), &ann, &b);
    assert_eq!(std::fs::read(only_entry(other.path())).unwrap(), bytes);
}

#[test]
fn other_order_is_a_miss() {
    let dir = tempfile::tempdir().unwrap();
    let f = circle();
    let (ann, b) = compute(&f);
    DiskCache::new(dir.path(), "DegRevLex").unwrap().store(&f, &delta(2), &ann, &b);
    let weighted = DiskCache::new(dir.path(), "Weighted([1, 1, 1, 1])").unwrap();
    assert!(weighted.load(&f, &delta(2)).is_none());

    // an entry copied under the wrong name still reads as a miss
    let path = only_entry(dir.path());
    let mut other_f = f.clone();
    other_f = other_f.add(&Operator::one(f.ring())).unwrap();
    let c = DiskCache::new(dir.path(), "DegRevLex").unwrap();
    c.store(&other_f, &delta(2), &ann, &b);
    let target = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).find(|p| *p != path).unwrap();
    std::fs::copy(&path, &target).unwrap();
    assert!(c.load(&other_f, &delta(2)).is_none());
}

#[test]
fn corrupt_entry_is_recomputed_and_overwritten() {
    let dir = tempfile::tempdir().unwrap();
    let f = circle();
    let good = fresh(dir.path()).bernstein_data(&f, &delta(2)).unwrap();
    let path = only_entry(dir.path());
    let bytes = std::fs::read(&path).unwrap();

    for junk in ["{ not json", "{\"order\": \"DegRevLex\"}"] {
        std::fs::write(&path, junk).unwrap();
        let again = fresh(dir.path()).bernstein_data(&f, &delta(2)).unwrap();
        assert_eq!(again.0.gens, good.0.gens);
        assert_eq!(again.1.b, good.1.b);
        assert_eq!(std::fs::read(&path).unwrap(), bytes);
    }

    // parseable JSON with an unreadable operator
    let text = String::from_utf8(bytes.clone()).unwrap().replacen("\"ann\": [\n", "\"ann\": [\n    \"x1 +* x2\",\n", 1);
    std::fs::write(&path, text).unwrap();
    assert!(DiskCache::new(dir.path(), "DegRevLex").unwrap().load(&f, &delta(2)).is_none());
    fresh(dir.path()).bernstein_data(&f, &delta(2)).unwrap();
    assert_eq!(std::fs::read(&path).unwrap(), bytes);
}
