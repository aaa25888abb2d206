fn main() -> std::process::ExitCode {
    ciflie::cli::main()
}
