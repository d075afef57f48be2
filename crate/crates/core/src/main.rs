fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(discharge_lab::cli::run(&argv));
}
