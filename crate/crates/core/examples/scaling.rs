// Times the pipeline on growing Gnp digraphs and fits a log-log slope.

use hamaudit::harness::bench_scaling;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let table = bench_scaling(&[25, 50, 100, 200], 0.3, 1, 2)?;
    print!("{}", table.to_csv());
    match table.slope {
        Some(s) => println!("log-log slope: {s:.2}"),
        None => println!("log-log slope: n/a"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
