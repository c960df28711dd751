//! Three-term contiguous relations between arbitrary shifts.
use qheine::contiguous::{three_term, three_term_pivot};
use qheine::paramgroup::ShiftOp;

fn main() -> qheine::Result<()> {
    for triple in [["A", "1", "Z"], ["A", "B", "C"], ["A^2", "Z", "B^-1"]] {
        let [x1, x2, x3] = triple.map(|s| ShiftOp::parse(s).unwrap());
        let mut rel = three_term(x1, x2, x3)?;
        let ok = rel.verify(12)?;
        println!("{}  (series check: {ok})", qheine::cli::relation_text(&rel));
        // The pivot route gives the same relation up to a unit.
        let alt = three_term_pivot(x1, x2, x3)?;
        println!("  pivot agrees: {}", alt.to_operator().length() == rel.to_operator().length());
    }
    Ok(())
}
