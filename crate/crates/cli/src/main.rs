fn main() {
    std::process::exit(covosc::run_from_env());
}
