use std::io::Write;

fn main() {
    let result = fancore::cli::run(std::env::args_os());
    let sink: &mut dyn Write = match result.status {
        fancore::cli::Status::Ok => &mut std::io::stdout(),
        _ => &mut std::io::stderr(),
    };
    let _ = sink.write_all(result.output.as_bytes());
    std::process::exit(result.status.exit_code());
}
