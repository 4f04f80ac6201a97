use polykay::catalog::*;
fn main() {
    let ds = dstar_cat::check_dstar_fixtures().unwrap();
    let undocumented: Vec<_> = ds.iter().filter(|d| d.errata.is_none()).collect();
    println!("dstar discrepancies: {} ({} undocumented)", ds.len(), undocumented.len());
    for d in undocumented { println!("UNDOC: {}: {}", d.label, &d.printed[..d.printed.len().min(300)]); }
    let un = dstar_cat::check_uncentered_account().unwrap();
    println!("uncentered account failures: {:?}", un);
    let sc = dstar_cat::check_sampling_cumulant_combinations().unwrap();
    println!("sampling cumulant combos: {}", sc.len());
}
