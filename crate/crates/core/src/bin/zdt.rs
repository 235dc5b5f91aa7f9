fn main() {
    std::process::exit(zdt::cli::run(std::env::args_os()));
}
