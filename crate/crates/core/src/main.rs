fn main() -> std::process::ExitCode {
    kgraph_cohn::cli::main()
}
