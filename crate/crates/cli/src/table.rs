/// Plain ASCII grid with a header row; columns padded to the widest cell.
pub fn render(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let width = |s: &str| s.chars().count();
    let mut w: Vec<usize> = header.iter().map(|h| width(h)).collect();
    for r in rows {
        for (i, c) in r.iter().enumerate().take(cols) {
            w[i] = w[i].max(width(c));
        }
    }
    let rule: String = w.iter().map(|&n| format!("+{}", "-".repeat(n + 2))).collect::<String>() + "+\n";
    let line = |cells: &[String]| -> String {
        cells.iter().zip(&w).map(|(c, &n)| format!("| {}{} ", c, " ".repeat(n - width(c)))).collect::<String>()
            + "|\n"
    };
    let mut out = rule.clone();
    out += &line(header);
    out += &rule;
    for r in rows {
        out += &line(r);
    }
    out += &rule;
    out
}
