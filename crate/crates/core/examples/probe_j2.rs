use qgkdim::cli::random_weights;
use qgkdim::rootsys::RootSystem;
use qgkdim::verma::{jantzen_sum_check, RewriteSystem};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::Instant;

fn main() {
    let t_all = Instant::now();
    let mut rng = StdRng::seed_from_u64(424242);
    for t in ["A2", "B2"] {
        let rs = RootSystem::build_str(t).unwrap();
        let sys = RewriteSystem::build(&rs, 8).unwrap();
        for (i, w) in random_weights(&rs, 25, 97531).into_iter().enumerate() {
            let h = rng.gen_range(1..=6i64);
            let nus = qgkdim::verma::rewrite::weights_of_height(&rs, h);
            let nu = nus[rng.gen_range(0..nus.len())].clone();
            let t0 = Instant::now();
            let c = jantzen_sum_check(&sys, &w, &nu);
            println!(
                "{t} #{i} nu={nu:?} dim_basis -> {:?} lhs {} rhs {} equal {}",
                t0.elapsed(), c.lhs, c.rhs, c.equal
            );
            assert!(c.equal);
        }
    }
    println!("total {:?}", t_all.elapsed());
}
