use lieembed::vecfield::{algebra, reference_table, vector_fields};

#[test]
fn wave_and_g2_tables_reproduced() {
    for name in ["wave16", "g2"] {
        let computed = algebra(name).unwrap();
        let table = reference_table(name).unwrap();
        assert_eq!(computed.to_json(), table.to_json(), "{name}");
    }
    assert_eq!(vector_fields("wave15").unwrap().fields.len(), 15);
}
