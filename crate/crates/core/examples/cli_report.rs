//! Drives the command-line front end in process and prints its report.
//!
//!     cargo run --example cli_report -- check --in ngr3.txt --what koszul

fn main() {
    let mut args: Vec<String> = std::env::args().collect();
    if args.len() == 1 {
        args = vec!["ngr".into(), "gen".into(), "--n".into(), "3".into()];
    }
    let code = ngr_workbench::cli::run(args, &mut std::io::stdout(), &mut std::io::stderr());
    eprintln!("exit code {code}");
}
