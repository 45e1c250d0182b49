fn main() {
    std::process::exit(semiaffine::cli::main())
}
