use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One command result in all three renderings.
#[derive(Debug, Clone)]
pub struct Output {
    pub text: String,
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Output {
    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Text => Ok(self.text.clone()),
            Format::Json => serde_json::to_string_pretty(&self.json)
                .map(|s| s + "\n")
                .map_err(|e| e.to_string()),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).map_err(|e| e.to_string())?;
                for row in &self.rows {
                    w.write_record(row).map_err(|e| e.to_string())?;
                }
                let bytes = w.into_inner().map_err(|e| e.to_string())?;
                String::from_utf8(bytes).map_err(|e| e.to_string())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_all_formats() {
        let out = Output {
            text: "hello\n".into(),
            json: serde_json::json!({"a": [1, 2]}),
            header: vec!["lambda", "coeff"],
            rows: vec![vec!["(2,1)".into(), "-2".into()]],
        };
        assert_eq!(out.render(Format::Text).unwrap(), "hello\n");
        assert_eq!(
            out.render(Format::Json).unwrap(),
            "{\n  \"a\": [\n    1,\n    2\n  ]\n}\n"
        );
        assert_eq!(
            out.render(Format::Csv).unwrap(),
            "lambda,coeff\n\"(2,1)\",-2\n"
        );
    }
}
