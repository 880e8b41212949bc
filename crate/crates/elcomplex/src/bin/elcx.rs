fn main() {
    std::process::exit(elcomplex::cli::main_entry(std::env::args_os()));
}
