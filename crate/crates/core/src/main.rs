fn main() {
    std::process::exit(tesspec::cli::main_entry());
}
