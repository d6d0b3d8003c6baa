mod common;

use ettk::chartab::{validate_table, CharacterTable};

#[test]
fn every_shipped_table_validates() {
    for name in common::table_names() {
        let t = common::table(&name);
        let report = validate_table(&t);
        assert!(report.is_valid(), "{name}: {:?}", report.violations);
    }
}

#[test]
fn every_shipped_fusion_validates() {
    for (sub, big) in common::fusion_pairs() {
        let f = common::fusion(&sub, &big);
        assert_eq!(f.validate(), Vec::<String>::new(), "{sub} -> {big}");
    }
}

#[test]
fn tables_roundtrip_bit_exact() {
    for name in common::table_names() {
        let t = common::table(&name);
        let text = t.to_json_string();
        let again = CharacterTable::from_json_str(&text).unwrap();
        assert_eq!(*t, again, "{name}");
        assert_eq!(again.to_json_string(), text, "{name}");
    }
}
