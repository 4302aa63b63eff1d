fn main() -> std::process::ExitCode {
    dirac_well::cli::main()
}
