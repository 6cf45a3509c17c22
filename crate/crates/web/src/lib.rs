//! Browser bindings: parse a word and draw, normalize or compare it.
//!
//! Every export takes word text and returns a string, so the page needs no
//! knowledge of the core types. Errors come back as thrown strings.

use wasm_bindgen::prelude::*;

use cylcob::json::InvariantJson;
use cylcob::normal_form::normalize as normal_form;
use cylcob::syntax::parse_word;
use cylcob::{eq_in, evaluate, CategoryTag, GeneratorWord};

fn parse(src: &str) -> Result<GeneratorWord, String> {
    parse_word(src).map_err(|e| e.render(src))
}

/// SVG drawing of the evaluated diagram.
pub fn svg_for(word: &str) -> Result<String, String> {
    let d = evaluate(&parse(word)?).map_err(|e| e.to_string())?;
    Ok(cylcob::render::render_svg(&d, word.trim()))
}

pub fn invariants_for(word: &str) -> Result<String, String> {
    let d = evaluate(&parse(word)?).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string_pretty(&InvariantJson::from(&d)).expect("invariants serialize"))
}

pub fn normal_form_for(word: &str) -> Result<String, String> {
    normal_form(&parse(word)?).map(|nf| nf.to_string()).map_err(|e| e.to_string())
}

pub fn equal_in(category: &str, w1: &str, w2: &str) -> Result<bool, String> {
    let cat: CategoryTag = category.parse()?;
    eq_in(cat, &parse(w1)?, &parse(w2)?).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn render_svg(word: &str) -> Result<String, JsValue> {
    svg_for(word).map_err(JsValue::from)
}

#[wasm_bindgen]
pub fn invariants_json(word: &str) -> Result<String, JsValue> {
    invariants_for(word).map_err(JsValue::from)
}

#[wasm_bindgen]
pub fn normalize(word: &str) -> Result<String, JsValue> {
    normal_form_for(word).map_err(JsValue::from)
}

#[wasm_bindgen]
pub fn equal(category: &str, w1: &str, w2: &str) -> Result<bool, JsValue> {
    equal_in(category, w1, w2).map_err(JsValue::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exports_work_natively() {
        assert!(svg_for("b(2,0)").unwrap().contains("strand cup"));
        assert!(invariants_for("tw(3)").unwrap().contains("\"t0\": 2"));
        assert_eq!(normal_form_for("tw(2)^5").unwrap(), "tw(2)");
        assert!(equal_in("cyl", "tw(4)^4", "id(4)").unwrap());
        assert!(!equal_in("da", "tw(4)^4", "id(4)").unwrap());
    }

    #[test]
    fn errors_are_readable() {
        assert!(normal_form_for("tw(2").unwrap_err().contains('^'));
        assert!(equal_in("cyl", "id(2)", "id(3)").is_err());
        assert!(equal_in("nope", "id(2)", "id(2)").is_err());
    }
}
