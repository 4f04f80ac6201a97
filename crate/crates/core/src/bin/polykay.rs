fn main() {
    std::process::exit(polykay::cli::run(std::env::args().skip(1)));
}
