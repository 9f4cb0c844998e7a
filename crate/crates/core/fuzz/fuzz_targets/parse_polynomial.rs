#![no_main]

use libfuzzer_sys::fuzz_target;
use lucastile::BivariatePolynomial;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(poly) = BivariatePolynomial::parse(text) {
        // canonical text and JSON both reproduce the parsed value
        let canonical = poly.to_canonical_text();
        let reparsed = BivariatePolynomial::parse(&canonical).expect("canonical text parses");
        assert_eq!(reparsed, poly);
        assert_eq!(reparsed.to_canonical_text(), canonical);

        let json = serde_json::to_string(&poly).unwrap();
        let back: BivariatePolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, poly);
    }
    // the JSON decoder sees the same bytes
    let _ = serde_json::from_slice::<BivariatePolynomial>(data);
});
