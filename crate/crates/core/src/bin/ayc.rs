fn main() {
    std::process::exit(ay_coxeter::cli::run());
}
