pub fn placeholder() -> i32 { 1 }
