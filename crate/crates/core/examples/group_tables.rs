//! Cycle-type tables of the transitive groups of prime degree, written to a
//! file and read back.

use galprime::reduction::{build_group_table, group_census, GroupCycleTable};

fn main() -> galprime::Result<()> {
    let p: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for c in group_census(p)?.iter() {
        println!("{:<10} order {:<12} {:?}", c.group.to_string(), c.order, c.method);
        for (t, n) in &c.counts {
            println!("    {n:>10}  {t}");
        }
    }

    let table = build_group_table(p)?;
    let path = std::env::temp_dir().join(format!("galprime-degree-{p}.txt"));
    table.write_file(&path)?;
    let back = GroupCycleTable::read_file(&path)?;
    assert_eq!(back, table);
    println!("\nround trip through {} ok", path.display());
    print!("{}", table.to_text());
    Ok(())
}
