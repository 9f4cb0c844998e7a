#![no_main]

use libfuzzer_sys::fuzz_target;
use lucastile::partitions::parse_parts;
use lucastile::Partition;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(parts) = parse_parts(text) else {
        return;
    };
    let cols = parts.iter().copied().max().unwrap_or(0);
    if parts.len() > 64 || cols > 64 {
        return;
    }
    if let Ok(lam) = Partition::new(parts, cols) {
        assert_eq!(Partition::parse(&lam.to_string(), cols).unwrap(), lam);
        let comp = lam.complement();
        assert_eq!(lam.size() + comp.size(), lam.rect().0 * cols);
        assert_eq!(comp.complement(), lam);
    }
});
