fn main() {
    std::process::exit(szego_lab::run());
}
