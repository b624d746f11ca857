//! Ranking two treatment regimens: the type-1 defuzzification collapses both
//! to the same score, while the bi-fuzzy degrees still rank regimen B above A.

use bfdes::samples::{regimen_a_degree, regimen_b_degree};

fn main() {
    let regimen_a_scores = [(0.6, 0.8), (0.5, 0.9), (0.5, 0.7), (0.6, 0.8)];
    let regimen_b_scores = [(0.5, 0.8), (0.5, 0.7), (0.6, 0.9), (0.5, 0.9)];
    let defuzz = |scores: &[(f64, f64)]| {
        scores.iter().map(|(lo, hi)| (lo + hi) / 2.0).sum::<f64>() / scores.len() as f64
    };
    println!("type-1 defuzzified A = {:.3}", defuzz(&regimen_a_scores));
    println!("type-1 defuzzified B = {:.3}", defuzz(&regimen_b_scores));

    let a = regimen_a_degree();
    let b = regimen_b_degree();
    println!("bi-fuzzy A = {a}  (centroid {:.4})", a.centroid());
    println!("bi-fuzzy B = {b}  (centroid {:.4})", b.centroid());
    if b.rank_geq(&a) && !a.rank_geq(&b) {
        println!("B ranks strictly above A");
    } else {
        println!("ranking is not strict");
    }
}
