use laytrop::identities::{semigroup_identity_2x2, Verdict};

fn main() {
    match semigroup_identity_2x2(500, 23).unwrap() {
        Verdict::HoldsOnSamples { .. } => println!("holds"),
        Verdict::Counterexample { trial, xs, .. } => {
            println!("counterexample at trial {trial}");
            for m in &xs {
                for i in 0..2 {
                    for j in 0..2 {
                        print!("{} ", m.get(i, j));
                    }
                    println!();
                }
                println!("---");
            }
        }
    }
}
