#![no_main]

use libfuzzer_sys::fuzz_target;
use lucastile::{Shape, Tiling};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for shape in [Shape::Linear, Shape::Circular] {
        if let Ok(tiling) = Tiling::parse(text, shape) {
            assert_eq!(Tiling::parse(&tiling.to_string(), shape).unwrap(), tiling);
            let (c, a, b) = tiling.weight_parts();
            assert_eq!(a as usize + 2 * b as usize, tiling.len());
            assert!(c == 1 || (c == 2 && tiling.is_empty()));
        }
    }
});
