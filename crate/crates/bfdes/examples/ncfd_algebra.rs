//! Meet, join, complement, inclusion, and centroid on normal convex fuzzy degrees.

use bfdes::Ncfd;

fn main() {
    let a: Ncfd = "1/0.6 + 0.6/0.9".parse().unwrap();
    let b: Ncfd = "1/0.9 + 0.8/1".parse().unwrap();

    println!("a            = {a}");
    println!("b            = {b}");
    println!("a meet b     = {}", a.meet(&b));
    println!("a join b     = {}", a.join(&b));
    println!("not a        = {}", a.complement());
    println!("a leq b      = {}", a.leq(&b));
    println!("b leq a      = {}", b.leq(&a));
    println!("centroid(a)  = {:.4}", a.centroid());
    println!("centroid(b)  = {:.4}", b.centroid());

    let bottom = Ncfd::bottom();
    let top = Ncfd::top();
    println!("a meet top   = {}", a.meet(&top));
    println!("a join bottom = {}", a.join(&bottom));
}
