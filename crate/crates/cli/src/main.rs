fn main() {
    std::process::exit(nefcone_cli::main_with_args(std::env::args_os()));
}
