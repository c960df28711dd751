//! The group generated by Heine's transformation and a ↔ b.
use qheine::classify::heine_group;

fn main() -> qheine::Result<()> {
    for e in heine_group()? {
        let w = if e.word.is_empty() { "1" } else { &e.word };
        println!("{w:>14}: {}", e.transformation.term);
    }
    Ok(())
}
