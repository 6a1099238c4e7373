fn main() {
    std::process::exit(normbasis_cli::run(std::env::args_os()));
}
