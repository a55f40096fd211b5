fn main() {
    std::process::exit(hitchin_forge::cli::main_entry());
}
