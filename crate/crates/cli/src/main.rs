fn main() {
    std::process::exit(blowup_lab::main_with(std::env::args_os()));
}
