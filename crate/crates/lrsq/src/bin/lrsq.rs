fn main() {
    std::process::exit(lrsq::cli::run(std::env::args()));
}
