fn main() {
    std::process::exit(pvzeta::cli::run(std::env::args_os()));
}
