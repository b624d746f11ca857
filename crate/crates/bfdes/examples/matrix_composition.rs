//! Meet-join matrix composition and the bi-fuzzy tensor product, including the
//! mixed-product identity (A tensor B) compose (C tensor D) = (A compose C) tensor (B compose D).

use bfdes::{NcfdMatrix, Ncfd};

fn m(rows: &[&[&str]]) -> NcfdMatrix {
    NcfdMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| s.parse::<Ncfd>().unwrap()).collect())
            .collect(),
    )
    .unwrap()
}

fn main() {
    let a = m(&[&["1/0.6 + 0.6/0.9", "1/0.9 + 0.8/1"], &["1/0.3 + 0.7/0.6", "1/0.3 + 0.7/0.6"]]);
    let x0 = NcfdMatrix::row_vector(vec!["1/1".parse().unwrap(), "1/0".parse().unwrap()]);

    println!("x0 compose A = {}", x0.compose(&a).unwrap());
    println!("A compose A  =\n{}", a.compose(&a).unwrap());

    let i2 = NcfdMatrix::identity(2);
    assert_eq!(i2.compose(&a).unwrap(), a);
    println!("I compose A == A");

    let b = m(&[&["1/0.5", "1/0.2"], &["1/0.8", "1/0.4"]]);
    let lhs = a.tensor(&b).compose(&a.tensor(&b)).unwrap();
    let rhs = a.compose(&a).unwrap().tensor(&b.compose(&b).unwrap());
    assert_eq!(lhs, rhs);
    println!("mixed-product identity holds on a 2x2 pair");
}
