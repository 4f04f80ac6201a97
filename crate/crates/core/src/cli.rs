//! Command-line dispatcher. Exit codes: 0 success, 1 verification failure,
//! 2 usage or domain error.

pub fn run<I: IntoIterator<Item = String>>(_args: I) -> i32 {
    eprintln!("not yet wired");
    2
}
