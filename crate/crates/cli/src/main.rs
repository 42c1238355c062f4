fn main() {
    println!("centext");
}
