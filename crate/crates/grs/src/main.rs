fn main() {
    std::process::exit(grs::cli::run(std::env::args().skip(1)));
}
