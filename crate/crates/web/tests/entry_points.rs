use nichols_web::{classify_report, dihedral_report, vabe_report};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn vabe_super_a2() {
    let v = parse(&vabe_report("z3", "-1", "1", 8).unwrap());
    assert_eq!(v["total"], 12);
    assert_eq!(v["classification"]["verdict"], "finite");
}

#[test]
fn vabe_rejects_bad_input() {
    assert!(vabe_report("z3", "-1", "1", 12).is_err());
    assert!(vabe_report("3", "-1", "1", 4).is_err());
}

#[test]
fn dihedral_relabellings() {
    for (fam, n, size) in [("L", 3, 7), ("I", 3, 6)] {
        let v = parse(&dihedral_report(fam, n).unwrap());
        assert_eq!(v["size"], size);
        assert_eq!(v["matches"], true);
        assert_eq!(v["congruence"], true);
    }
    assert!(dihedral_report("I", 1).is_err());
    assert!(dihedral_report("X", 3).is_err());
}

#[test]
fn classify_descriptor() {
    let v = parse(&classify_report(r#"{"family":"I","params":{"n":4}}"#).unwrap());
    assert_eq!(v["verdict"], "infinite");
    assert!(classify_report("{").is_err());
}
