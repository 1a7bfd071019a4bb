fn main() {
    hyperindex::cli::main();
}
