fn main() {
    println!("knotoid");
}
