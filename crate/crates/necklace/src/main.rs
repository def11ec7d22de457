fn main() {
    std::process::exit(necklace::cli::run());
}
