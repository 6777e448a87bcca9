//! Dynkin gradings, graded dimensions, heights and the even good grading of a
//! hook.

use wlevels::liealg::{
    check_even_good_grading, dynkin_grading, graded_dims, height_and_np, hook_good_grading,
    x_norm, HalfInt, Partition,
};

fn main() -> wlevels::Result<()> {
    for text in ["3,1,1", "4,1,1", "2,2,2", "3,2,1"] {
        let p: Partition = text.parse()?;
        let g = dynkin_grading(&p);
        let dims = graded_dims(&g);
        let labels: Vec<String> = g.weighted_labels.iter().map(ToString::to_string).collect();
        let (height, _) = height_and_np(&p, 1);
        println!("{p}: labels [{}], (x|x) = {}, height {height}", labels.join(" "), x_norm(&g));
        let top = (g.largest_eigenvalue() - g.smallest_eigenvalue()).twice();
        for t in 0..=top {
            let j = HalfInt::from_twice(-t);
            if dims.g(j) > 0 {
                println!("  j = {:>3}: dim g_-j = {:>2}, dim g^f_-j = {:>2}", HalfInt::from_twice(t), dims.g(j), dims.gf(j));
            }
        }
        println!("  dim g^f = {} (dual partition {:?})", dims.total_gf(), p.dual());
    }

    let (m, n) = (4, 2);
    let diag = hook_good_grading(m, n);
    let shown: Vec<String> = diag.iter().map(ToString::to_string).collect();
    let check = check_even_good_grading(&Partition::hook(m, n)?, &diag);
    println!("good grading for ({m},1^{n}): diag({}) passes: {}", shown.join(", "), check.passes());
    Ok(())
}
