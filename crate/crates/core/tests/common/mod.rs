//! Independent oracle for the integration tests. Works on plain `U`/`D`
//! strings and shares no code with the library.

#![allow(dead_code)]

/// Generalized binomial: `a(a-1)...(a-b+1)/b!` for `b >= 0`, else 0.
pub fn binom(a: i64, b: i64) -> i128 {
    if b < 0 {
        return 0;
    }
    let mut num = 1i128;
    let mut den = 1i128;
    for i in 0..b {
        num *= (a - i) as i128;
        den *= (i + 1) as i128;
    }
    num / den
}

/// Gap-counting binomial: zero unless `0 <= b <= a`.
pub fn choose(a: i64, b: i64) -> i128 {
    if a < 0 || b < 0 || b > a {
        0
    } else {
        binom(a, b)
    }
}

pub fn catalan(n: usize) -> i128 {
    binom(2 * n as i64, n as i64) / (n as i128 + 1)
}

/// All words with `n` U's and `n` D's, lexicographic with `D < U`.
pub fn balanced(n: usize) -> Vec<String> {
    let mut out = Vec::new();
    let mut buf = String::new();
    fn go(buf: &mut String, u: usize, d: usize, out: &mut Vec<String>) {
        if u == 0 && d == 0 {
            out.push(buf.clone());
            return;
        }
        if d > 0 {
            buf.push('D');
            go(buf, u, d - 1, out);
            buf.pop();
        }
        if u > 0 {
            buf.push('U');
            go(buf, u - 1, d, out);
            buf.pop();
        }
    }
    go(&mut buf, n, n, &mut out);
    out
}

pub fn dyck(n: usize) -> Vec<String> {
    let mut out = Vec::new();
    each_dyck(n, |w| out.push(w.to_string()));
    out
}

/// Visits every Dyck word of semilength `n` without collecting them.
pub fn each_dyck(n: usize, mut f: impl FnMut(&str)) {
    fn go(buf: &mut String, n: usize, u: usize, d: usize, f: &mut dyn FnMut(&str)) {
        if d == n {
            f(buf);
            return;
        }
        if d < u {
            buf.push('D');
            go(buf, n, u, d + 1, f);
            buf.pop();
        }
        if u < n {
            buf.push('U');
            go(buf, n, u + 1, d, f);
            buf.pop();
        }
    }
    go(&mut String::new(), n, 0, 0, &mut f);
}

/// Heights at every vertex, `w.len() + 1` entries.
pub fn heights(w: &str) -> Vec<i64> {
    let mut h = vec![0];
    for c in w.bytes() {
        let last = *h.last().unwrap();
        h.push(if c == b'U' { last + 1 } else { last - 1 });
    }
    h
}

/// Maximal runs as `(letter, start, length)`.
pub fn runs(w: &str) -> Vec<(u8, usize, usize)> {
    let b = w.as_bytes();
    let mut out: Vec<(u8, usize, usize)> = Vec::new();
    for (i, &c) in b.iter().enumerate() {
        match out.last_mut() {
            Some(r) if r.0 == c => r.2 += 1,
            _ => out.push((c, i, 1)),
        }
    }
    out
}

pub fn ascents(w: &str) -> Vec<usize> {
    runs(w)
        .into_iter()
        .filter(|r| r.0 == b'U')
        .map(|r| r.2)
        .collect()
}

pub fn pattern(w: &str, pat: &str) -> usize {
    let (b, p) = (w.as_bytes(), pat.as_bytes());
    if b.len() < p.len() {
        return 0;
    }
    (0..=b.len() - p.len())
        .filter(|&i| {
            p.iter()
                .enumerate()
                .all(|(j, &c)| c == b'X' || b[i + j] == c)
        })
        .count()
}

pub fn long_interior_inclines(w: &str) -> usize {
    let r = runs(w);
    if r.len() < 3 {
        return 0;
    }
    r[1..r.len() - 1].iter().filter(|x| x.2 >= 2).count()
}

pub fn long_nonterminal_inclines(w: &str) -> usize {
    let r = runs(w);
    r.iter()
        .take(r.len().saturating_sub(1))
        .filter(|x| x.2 >= 2)
        .count()
}

pub fn long_noninitial_ascents(w: &str) -> usize {
    ascents(w).iter().skip(1).filter(|&&l| l >= 2).count()
}

pub fn hills(w: &str) -> usize {
    let h = heights(w);
    let b = w.as_bytes();
    (0..b.len().saturating_sub(1))
        .filter(|&i| h[i] == 0 && b[i] == b'U' && b[i + 1] == b'D')
        .count()
}

pub fn returns(w: &str) -> usize {
    heights(w)[1..].iter().filter(|&&h| h == 0).count()
}

pub fn is_strict(w: &str) -> bool {
    returns(w) == 1
}

pub fn terminal_descent(w: &str) -> usize {
    w.bytes().rev().take_while(|&c| c == b'D').count()
}

/// Lengths of the descents that end at ground level.
pub fn ground_descents(w: &str) -> Vec<usize> {
    let h = heights(w);
    runs(w)
        .into_iter()
        .filter(|r| r.0 == b'D' && h[r.1 + r.2] == 0)
        .map(|r| r.2)
        .collect()
}

/// Upsteps leaving height zero or more.
pub fn x_stat(w: &str) -> usize {
    let h = heights(w);
    w.bytes()
        .enumerate()
        .filter(|&(i, c)| c == b'U' && h[i] >= 0)
        .count()
}

pub fn odd_ascents(w: &str) -> usize {
    ascents(w).iter().filter(|&&l| l % 2 == 1).count()
}

/// Upsteps whose enclosed subpath has a hill at its own base level.
pub fn hill_producing(w: &str) -> usize {
    let h = heights(w);
    let b = w.as_bytes();
    let mut count = 0;
    for i in 0..b.len() {
        if b[i] != b'U' {
            continue;
        }
        let base = h[i + 1];
        let j = (i + 1..b.len())
            .find(|&j| h[j + 1] == h[i])
            .expect("matched");
        if (i + 1..j.saturating_sub(1)).any(|t| h[t] == base && b[t] == b'U' && b[t + 1] == b'D') {
            count += 1;
        }
    }
    count
}

pub fn reverse(w: &str) -> String {
    w.chars()
        .rev()
        .map(|c| if c == 'U' { 'D' } else { 'U' })
        .collect()
}

/// Vertices incident to no downstep; none for the empty word.
pub fn df_vertices(w: &str) -> Vec<usize> {
    let b = w.as_bytes();
    if b.is_empty() {
        return Vec::new();
    }
    (0..=b.len())
        .filter(|&v| (v == 0 || b[v - 1] == b'U') && (v == b.len() || b[v] == b'U'))
        .collect()
}

/// Vertices strictly inside an ascent.
pub fn ia_vertices(w: &str) -> Vec<usize> {
    let b = w.as_bytes();
    (1..b.len())
        .filter(|&v| b[v - 1] == b'U' && b[v] == b'U')
        .collect()
}

/// Ascent lengths paired with how many marked vertices lie on each ascent
/// (its bottom and top vertices included).
pub fn ascent_marks(w: &str, marks: &[usize]) -> Vec<(usize, usize)> {
    runs(w)
        .into_iter()
        .filter(|r| r.0 == b'U')
        .map(|(_, s, l)| (l, marks.iter().filter(|&&v| v >= s && v <= s + l).count()))
        .collect()
}

pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mut rest in subsets(&items[1..], k - 1) {
        rest.insert(0, items[0]);
        out.push(rest);
    }
    out.extend(subsets(&items[1..], k));
    out
}

/// Schröder words of size `n` over `U`, `D`, `F` (F two units wide).
pub fn schroder(n: usize) -> Vec<String> {
    let mut out = Vec::new();
    fn go(buf: &mut String, left: usize, h: usize, out: &mut Vec<String>) {
        if left == 0 {
            if h == 0 {
                out.push(buf.clone());
            }
            return;
        }
        if h > 0 {
            buf.push('D');
            go(buf, left - 1, h - 1, out);
            buf.pop();
        }
        if left >= 2 {
            buf.push('F');
            go(buf, left - 2, h, out);
            buf.pop();
        }
        if h + 1 < left {
            buf.push('U');
            go(buf, left - 1, h + 1, out);
            buf.pop();
        }
    }
    go(&mut String::new(), 2 * n, 0, &mut out);
    out
}

/// Does some `F` sit at height zero?
pub fn has_ground_flat(s: &str) -> bool {
    let mut h = 0i64;
    for c in s.chars() {
        match c {
            'U' => h += 1,
            'D' => h -= 1,
            _ if h == 0 => return true,
            _ => {}
        }
    }
    false
}

/// Tally of values into a trimmed count vector.
pub fn tally(values: impl IntoIterator<Item = usize>) -> Vec<u64> {
    let mut v: Vec<u64> = Vec::new();
    for x in values {
        if v.len() <= x {
            v.resize(x + 1, 0);
        }
        v[x] += 1;
    }
    v
}

pub fn trimmed(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Trimmed row of `f(k)` for `k = 0..=n + 1`.
pub fn row(n: usize, f: impl Fn(i64) -> i128) -> Vec<u64> {
    trimmed(
        (0..=n as i64 + 1)
            .map(|k| u64::try_from(f(k)).expect("nonnegative"))
            .collect(),
    )
}

/// Interior of the first component; empty for the empty word.
pub fn interior(w: &str) -> String {
    let h = heights(w);
    match (1..h.len()).find(|&i| h[i] == 0) {
        Some(j) => w[1..j - 1].to_string(),
        None => String::new(),
    }
}
