fn main() { println!("anchor-calc"); }
