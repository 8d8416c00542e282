fn main() {
    let (code, report) = quartics::cli::run(std::env::args_os());
    if let Some(report) = report {
        print!("{}", report.to_json());
    }
    std::process::exit(code);
}
