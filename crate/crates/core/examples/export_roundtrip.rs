//! Render tables in every format and parse them back.

use triarray::export::{build_table, Format, Structure, Table, TableRequest};

fn main() {
    let requests = [
        (Structure::A, TableRequest { symbolic: true, r_max: Some(5), ..Default::default() }),
        (Structure::B, TableRequest { s: Some(3), ..Default::default() }),
        (Structure::Phi, TableRequest { n_max: Some(2), ..Default::default() }),
        (Structure::F, TableRequest { n: Some(3), ..Default::default() }),
    ];
    for (structure, req) in requests {
        let table = build_table(structure, &req).unwrap();
        for format in [Format::Csv, Format::Json, Format::Latex] {
            let text = table.render(format);
            let back = Table::parse(format, &text, &table.header).unwrap();
            assert_eq!(back, table);
        }
        println!("{structure} round-trips; csv:\n{}", table.render(Format::Csv));
    }
}
