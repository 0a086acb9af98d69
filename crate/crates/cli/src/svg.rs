//! Minimal SVG rendering of a Newton polygon: valuation points, the lower
//! hull with its vertices, and the lattice points on each edge. Purely
//! presentational; the y axis is flipped so valuation increases upward.

use polycert::newton::NewtonPolygon;

const SCALE: i64 = 40;
const PAD: i64 = 30;
const GRID_LIMIT: usize = 50;

fn sx(x: usize) -> i64 {
    PAD + x as i64 * SCALE
}

fn sy(y: u64, max_y: u64) -> i64 {
    PAD + (max_y - y) as i64 * SCALE
}

pub fn render(np: &NewtonPolygon) -> String {
    let max_x = np.points.iter().map(|p| p.x).max().unwrap_or(0);
    let max_y = np.points.iter().map(|p| p.y).max().unwrap_or(0);
    let width = sx(max_x) + PAD;
    let height = sy(0, max_y) + PAD;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {width} {height}\" width=\"{width}\" height=\"{height}\">\n"
    ));
    out.push_str(&format!("<title>Newton polygon, prime {}</title>\n", np.prime));

    if max_x <= GRID_LIMIT && max_y as usize <= GRID_LIMIT {
        for x in 0..=max_x {
            out.push_str(&format!(
                "<line class=\"grid\" x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#ddd\"/>\n",
                sx(x),
                sy(max_y, max_y),
                sy(0, max_y)
            ));
        }
        for y in 0..=max_y {
            out.push_str(&format!(
                "<line class=\"grid\" x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"#ddd\"/>\n",
                sx(0),
                sy(y, max_y),
                sx(max_x)
            ));
        }
    }

    let path: Vec<String> =
        np.vertices.iter().map(|v| format!("{},{}", sx(v.x), sy(v.y, max_y))).collect();
    out.push_str(&format!(
        "<polyline class=\"hull\" points=\"{}\" fill=\"none\" stroke=\"#003\" stroke-width=\"2\"/>\n",
        path.join(" ")
    ));

    // interior lattice points on each edge
    for e in &np.edges {
        let steps = e.lattice_count - 1;
        if steps >= 2 {
            let dx = (e.to.x - e.from.x) as i64;
            let dy = e.to.y as i64 - e.from.y as i64;
            for t in 1..steps {
                let lx = sx(e.from.x) + dx * t as i64 * SCALE / steps as i64;
                let ly = sy(e.from.y, max_y) - dy * t as i64 * SCALE / steps as i64;
                out.push_str(&format!(
                    "<circle class=\"lattice\" cx=\"{lx}\" cy=\"{ly}\" r=\"3\" fill=\"#c60\"/>\n"
                ));
            }
        }
    }

    for p in &np.points {
        out.push_str(&format!(
            "<circle class=\"point\" cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"#888\"/>\n",
            sx(p.x),
            sy(p.y, max_y)
        ));
    }
    for v in &np.vertices {
        out.push_str(&format!(
            "<circle class=\"vertex\" cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"#036\"/>\n",
            sx(v.x),
            sy(v.y, max_y)
        ));
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use polycert::newton::newton_polygon;
    use polycert::Polynomial;

    #[test]
    fn svg_marks_exactly_the_hull_vertices() {
        let f = Polynomial::from_i64(&[-2, -4, 3, -2, 2]);
        let np = newton_polygon(&f, &BigInt::from(2)).unwrap();
        let svg = render(&np);
        let marks = svg.matches("class=\"vertex\"").count();
        assert_eq!(marks, np.vertices.len());
        assert!(svg.contains("<svg"));
        assert!(svg.ends_with("</svg>\n"));
    }
}
