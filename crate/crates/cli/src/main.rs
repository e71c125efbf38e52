fn main() {
    std::process::exit(pompeiu_cli::run(std::env::args_os()));
}
