//! Computing-tree controllability check of a two-state specification against a
//! two-state plant, under two different uncontrollability assignments.

use bfdes::format::render_report;
use bfdes::samples::{example2_plant, example2_spec, example2_uc_primary, example2_uc_swapped};
use bfdes::supervisory::DEFAULT_STATE_BUDGET;
use bfdes::{check_controllability, check_nonblocking_supervision};

fn main() {
    let plant = example2_plant();
    let spec = example2_spec();

    for (name, uc) in [("primary", example2_uc_primary()), ("swapped", example2_uc_swapped())] {
        let report = check_controllability(&plant, &spec, &uc, DEFAULT_STATE_BUDGET).unwrap();
        println!("--- uncontrollability map: {name} ---");
        print!("{}", render_report(&plant, &spec, &uc, &report));
        println!();
    }

    let uc = example2_uc_swapped();
    let report = check_nonblocking_supervision(&plant, &spec, &uc, DEFAULT_STATE_BUDGET).unwrap();
    println!("nonblocking supervision achievable: {}", report.nonblocking_achievable());
}
