fn main() {
    std::process::exit(chaos1d::cli::run(std::env::args()));
}
