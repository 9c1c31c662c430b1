fn main() {
    std::process::exit(qzeta::cli::run(std::env::args_os()));
}
