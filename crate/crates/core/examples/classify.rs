use mcg_symplectic::classify::classify;

fn main() -> mcg_symplectic::Result<()> {
    for g in 2..=5 {
        for n in 1..=3 * g {
            let kinds: Vec<String> = classify(g, n)?.iter().map(|v| v.kind.to_string()).collect();
            println!("g = {g}, n = {n:2}: {}", kinds.join(", "));
        }
    }
    for v in classify(3, 6)? {
        println!("{}: {}", v.kind, v.citation);
    }
    Ok(())
}
