//! Drive the command-line front end in-process.

use fancore::cli::run;

pub fn run_example() -> fancore::Result<()> {
    let fixture = |name: &str| format!("{}/fixtures/{name}.graph", env!("CARGO_MANIFEST_DIR"));
    for args in [
        vec!["chi".to_string(), fixture("fat-triangle-t0")],
        vec!["bqueue".to_string(), fixture("c5")],
        vec!["corefan".to_string(), fixture("fig2-h4")],
        vec!["hypothesis".to_string(), fixture("fat-triangle-t1"), "--t".into(), "1".into()],
    ] {
        let result = run(std::iter::once("fancore".to_string()).chain(args.iter().cloned()));
        println!("$ fancore {}  (exit {})", args[0], result.status.exit_code());
        print!("{}", result.output);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fancore::Result<()> {
    run_example()
}
