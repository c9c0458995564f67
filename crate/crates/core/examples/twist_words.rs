//! Parses words in Dehn twists and evaluates them on homology.
//!
//!     cargo run --example twist_words -- 2 "t(a1) t([1,1,0,0])^-2 t(b2)"

use mcg_symplectic::symplectic::is_symplectic;
use mcg_symplectic::word::{evaluate_word, parse_word};

fn main() {
    let mut args = std::env::args().skip(1);
    let g: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let inputs: Vec<String> = match args.next() {
        Some(w) => vec![w],
        None => [
            "t(a1) t(b1) t(a1)",
            "t(b1) t(a1) t(b1)",
            "t(a1)^-1 t(a1)",
            "t(a1) t(c1)",
        ]
        .map(String::from)
        .to_vec(),
    };
    for src in inputs {
        match parse_word(&src, g) {
            Ok(w) => {
                let m = evaluate_word(&w);
                let sp = is_symplectic(&m, g).unwrap_or(false);
                println!("{w} -> {m} (symplectic: {sp})");
            }
            Err(e) => println!("{src:?}: {e}"),
        }
    }
}
