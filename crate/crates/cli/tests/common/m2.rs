//! A small evaluator for the subset of the Macaulay2 language used by the
//! reference listing in `fixtures/` and by our exported scripts: ring
//! declarations with degree lists, matrices, `det`, `submatrix`,
//! `transpose`, `||` and `|`, column and entry subscripts, user functions
//! with local `:=` bindings, `ideal`, `substitute` and `sub`.
//!
//! Statements that call anything else (`minors`, `codim`, `betti`, ...) are
//! evaluated to an error value that only surfaces if it is used later.

use std::collections::HashMap;
use std::rc::Rc;
use std::sync::Arc;

use unproj_core::ring::{parse_polynomial, substitute, SubstitutionSpec};
use unproj_core::{PolyMatrix, Polynomial, VariableTable};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Sym(&'static str),
    Newline,
}

const SYMBOLS: [&str; 22] =
    ["||", ":=", "=>", "->", "+", "-", "*", "/", "^", "(", ")", "{", "}", "[", "]", ",", ";", "=", "|", "_", ":", "~"];

fn tokenize(src: &str) -> Result<Vec<Tok>, String> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c == b'-' && b.get(i + 1) == Some(&b'-') {
            while i < b.len() && b[i] != b'\n' {
                i += 1;
            }
        } else if c == b'\n' {
            out.push(Tok::Newline);
            i += 1;
        } else if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Int(src[start..i].parse().map_err(|e| format!("{e}"))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < b.len() && b[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(src[start..i].to_string()));
        } else {
            let sym = SYMBOLS
                .iter()
                .find(|s| src[i..].starts_with(**s))
                .ok_or_else(|| format!("unexpected character `{}` at byte {i}", c as char))?;
            out.push(Tok::Sym(sym));
            i += sym.len();
        }
    }
    Ok(out)
}

/// Splits at `;` and at line ends outside brackets, unless the line ends
/// with an operator that needs a right operand.
fn statements(tokens: Vec<Tok>) -> Vec<Vec<Tok>> {
    const CONTINUES: [&str; 12] = ["+", "-", "*", "/", "^", "|", "||", "=", ":=", "->", ",", "=>"];
    let mut out = Vec::new();
    let mut cur: Vec<Tok> = Vec::new();
    let mut depth = 0i32;
    for t in tokens {
        match &t {
            Tok::Sym("(" | "{" | "[") => depth += 1,
            Tok::Sym(")" | "}" | "]") => depth -= 1,
            _ => {}
        }
        let ends = match &t {
            Tok::Sym(";") => depth == 0,
            Tok::Newline => depth == 0 && !matches!(cur.last(), Some(Tok::Sym(s)) if CONTINUES.contains(s)),
            _ => false,
        };
        if ends {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else if t != Tok::Newline {
            cur.push(t);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

#[derive(Clone, Debug)]
pub enum Expr {
    Int(i64),
    Ident(String),
    Neg(Box<Expr>),
    Bin(&'static str, Box<Expr>, Box<Expr>),
    Apply(Box<Expr>, Box<Expr>),
    Subscript(Box<Expr>, Box<Expr>),
    Tuple(Vec<Expr>),
    Block(Vec<Expr>),
    List(Vec<Expr>),
    Bracket(Vec<Expr>),
    Repeat(Box<Expr>, Box<Expr>),
    Opt(Box<Expr>, Box<Expr>),
    Lambda(Rc<(Vec<String>, Expr)>),
    Assign(String, Box<Expr>, bool),
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn at(&self, s: &str) -> bool {
        matches!(self.peek(), Some(Tok::Sym(t)) if *t == s)
    }

    fn eat(&mut self, s: &str) -> bool {
        let hit = self.at(s);
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn expect(&mut self, s: &str) -> Result<(), String> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(format!("expected `{s}`, found {:?}", self.peek()))
        }
    }

    fn statement(&mut self) -> Result<Expr, String> {
        if let (Some(Tok::Ident(name)), Some(Tok::Sym(op @ ("=" | ":=")))) = (self.toks.first(), self.toks.get(1)) {
            self.pos = 2;
            let local = *op == ":=";
            return Ok(Expr::Assign(name.clone(), Box::new(self.expr()?), local));
        }
        self.expr()
    }

    fn item(&mut self) -> Result<Expr, String> {
        if let (Some(Tok::Ident(name)), Some(Tok::Sym(":="))) = (self.peek().cloned(), self.toks.get(self.pos + 1)) {
            self.pos += 2;
            return Ok(Expr::Assign(name, Box::new(self.expr()?), true));
        }
        self.expr()
    }

    fn expr(&mut self) -> Result<Expr, String> {
        let lhs = self.vertical()?;
        if self.eat("=>") {
            return Ok(Expr::Opt(Box::new(lhs), Box::new(self.vertical()?)));
        }
        Ok(lhs)
    }

    fn vertical(&mut self) -> Result<Expr, String> {
        let mut lhs = self.horizontal()?;
        while self.eat("||") {
            lhs = Expr::Bin("||", Box::new(lhs), Box::new(self.horizontal()?));
        }
        Ok(lhs)
    }

    fn horizontal(&mut self) -> Result<Expr, String> {
        let mut lhs = self.sum()?;
        while self.eat("|") {
            lhs = Expr::Bin("|", Box::new(lhs), Box::new(self.sum()?));
        }
        Ok(lhs)
    }

    fn sum(&mut self) -> Result<Expr, String> {
        let mut lhs = self.product()?;
        loop {
            if self.eat("+") {
                lhs = Expr::Bin("+", Box::new(lhs), Box::new(self.product()?));
            } else if self.eat("-") {
                lhs = Expr::Bin("-", Box::new(lhs), Box::new(self.product()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<Expr, String> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat("*") {
                lhs = Expr::Bin("*", Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat("/") {
                lhs = Expr::Bin("/", Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, String> {
        if self.eat("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.application()?;
        if self.eat("^") {
            return Ok(Expr::Bin("^", Box::new(base), Box::new(self.unary()?)));
        }
        Ok(base)
    }

    fn starts_primary(&self) -> bool {
        matches!(self.peek(), Some(Tok::Ident(_) | Tok::Int(_) | Tok::Sym("(" | "{" | "[")))
    }

    fn application(&mut self) -> Result<Expr, String> {
        let head = self.postfix()?;
        if self.starts_primary() {
            return Ok(Expr::Apply(Box::new(head), Box::new(self.application()?)));
        }
        Ok(head)
    }

    fn postfix(&mut self) -> Result<Expr, String> {
        let mut e = self.primary()?;
        while self.eat("_") {
            let index = match self.peek().cloned() {
                Some(Tok::Int(k)) => {
                    self.pos += 1;
                    Expr::Int(k)
                }
                Some(Tok::Ident(s)) => {
                    self.pos += 1;
                    Expr::Ident(s)
                }
                _ => self.primary()?,
            };
            e = Expr::Subscript(Box::new(e), Box::new(index));
        }
        Ok(e)
    }

    fn list_items(&mut self, close: &str) -> Result<Vec<Expr>, String> {
        let mut items = Vec::new();
        while !self.at(close) {
            let e = self.expr()?;
            items.push(if self.eat(":") { Expr::Repeat(Box::new(e), Box::new(self.expr()?)) } else { e });
            if !self.eat(",") {
                break;
            }
        }
        self.expect(close)?;
        Ok(items)
    }

    fn primary(&mut self) -> Result<Expr, String> {
        let t = self.peek().cloned().ok_or("unexpected end of statement")?;
        self.pos += 1;
        match t {
            Tok::Int(k) => Ok(Expr::Int(k)),
            Tok::Ident(s) => Ok(Expr::Ident(s)),
            Tok::Sym("{") => Ok(Expr::List(self.list_items("}")?)),
            Tok::Sym("[") => Ok(Expr::Bracket(self.list_items("]")?)),
            Tok::Sym("(") => {
                let mut items = Vec::new();
                let mut block = false;
                while !self.at(")") {
                    items.push(self.item()?);
                    if self.eat(";") {
                        block = true;
                    } else if !self.eat(",") {
                        break;
                    }
                }
                self.expect(")")?;
                if self.eat("->") {
                    let params = items
                        .into_iter()
                        .map(|e| match e {
                            Expr::Ident(s) => Ok(s),
                            other => Err(format!("bad parameter {other:?}")),
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    let body = self.expr()?;
                    return Ok(Expr::Lambda(Rc::new((params, body))));
                }
                Ok(match (block, items.len()) {
                    (true, _) => Expr::Block(items),
                    (false, 1) => items.pop().expect("one item"),
                    _ => Expr::Tuple(items),
                })
            }
            other => Err(format!("unexpected token {other:?}")),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Val {
    Int(i64),
    Poly(Polynomial),
    Mat(PolyMatrix),
    Vector(Vec<Polynomial>),
    List(Vec<Val>),
    Tuple(Vec<Val>),
    Opt(Box<Val>, Box<Val>),
    Func(Rc<(Vec<String>, Expr)>),
    Builtin(&'static str),
    Field,
    Ring(Arc<VariableTable>, Option<Vec<u32>>),
    Ideal(Vec<Polynomial>),
    Symbol(String),
    Error(String),
}

const BUILTINS: [&str; 7] = ["matrix", "transpose", "det", "submatrix", "ideal", "substitute", "sub"];

/// Global bindings after running a script.
pub struct Session {
    globals: HashMap<String, Val>,
    frames: Vec<HashMap<String, Val>>,
    ring: Option<Arc<VariableTable>>,
}

type R<T> = Result<T, String>;

fn index(v: &Val) -> R<usize> {
    match v {
        Val::Int(k) if *k >= 0 => Ok(*k as usize),
        other => Err(format!("expected an index, got {other:?}")),
    }
}

impl Session {
    pub fn run(src: &str) -> R<Self> {
        let mut s = Session { globals: HashMap::new(), frames: Vec::new(), ring: None };
        for stmt in statements(tokenize(src)?) {
            let mut p = Parser { toks: &stmt, pos: 0 };
            let e = p.statement()?;
            if p.pos != stmt.len() {
                return Err(format!("trailing tokens in statement {stmt:?}"));
            }
            match e {
                Expr::Assign(name, rhs, _) => {
                    let v = s.eval(&rhs).unwrap_or_else(Val::Error);
                    if let Val::Ring(t, _) = &v {
                        s.ring = Some(t.clone());
                    }
                    s.globals.insert(name, v);
                }
                other => {
                    let _ = s.eval(&other);
                }
            }
        }
        Ok(s)
    }

    pub fn get(&self, name: &str) -> Option<&Val> {
        self.globals.get(name)
    }

    /// The generators of an ideal-valued global.
    pub fn ideal(&self, name: &str) -> R<Vec<Polynomial>> {
        match self.get(name) {
            Some(Val::Ideal(g)) => Ok(g.clone()),
            Some(Val::Error(e)) => Err(format!("{name} failed: {e}")),
            other => Err(format!("{name} is not an ideal: {other:?}")),
        }
    }

    /// Variables and degrees of a ring-valued global.
    pub fn ring(&self, name: &str) -> R<(Arc<VariableTable>, Option<Vec<u32>>)> {
        match self.get(name) {
            Some(Val::Ring(t, d)) => Ok((t.clone(), d.clone())),
            other => Err(format!("{name} is not a ring: {other:?}")),
        }
    }

    fn table(&self) -> R<&Arc<VariableTable>> {
        self.ring.as_ref().ok_or_else(|| "no ring declared".to_string())
    }

    fn lookup(&self, name: &str) -> R<Val> {
        if let Some(v) = self.frames.last().and_then(|f| f.get(name)).or_else(|| self.globals.get(name)) {
            return match v {
                Val::Error(e) => Err(format!("{name} is unusable: {e}")),
                v => Ok(v.clone()),
            };
        }
        if let Some(t) = &self.ring {
            if let Some(i) = t.position(name) {
                return Ok(Val::Poly(Polynomial::var(t, i)));
            }
        }
        if name == "QQ" {
            return Ok(Val::Field);
        }
        if let Some(b) = BUILTINS.iter().find(|b| **b == name) {
            return Ok(Val::Builtin(b));
        }
        Ok(Val::Symbol(name.to_string()))
    }

    fn poly(&self, v: Val) -> R<Polynomial> {
        match v {
            Val::Poly(p) => Ok(p),
            Val::Int(k) => Ok(Polynomial::integer(self.table()?, k)),
            Val::Mat(m) if m.rows() == 1 && m.cols() == 1 => Ok(m.get(0, 0).clone()),
            other => Err(format!("expected a ring element, got {other:?}")),
        }
    }

    fn matrix(&self, rows: Vec<Val>) -> R<PolyMatrix> {
        let rows = rows
            .into_iter()
            .map(|r| match r {
                Val::List(entries) => entries.into_iter().map(|e| self.poly(e)).collect::<R<Vec<_>>>(),
                other => Err(format!("matrix rows must be lists, got {other:?}")),
            })
            .collect::<R<Vec<_>>>()?;
        PolyMatrix::from_rows(self.table()?, rows).map_err(|e| e.to_string())
    }

    fn eval(&mut self, e: &Expr) -> R<Val> {
        Ok(match e {
            Expr::Int(k) => Val::Int(*k),
            Expr::Ident(s) => self.lookup(s)?,
            Expr::Neg(a) => match self.eval(a)? {
                Val::Int(k) => Val::Int(-k),
                Val::Mat(m) => Val::Mat(m.neg()),
                other => Val::Poly(-self.poly(other)?),
            },
            Expr::Bin(op, a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                self.binary(op, a, b)?
            }
            Expr::Apply(f, arg) => {
                let f = self.eval(f)?;
                if let (Val::Field, Expr::Bracket(items)) = (&f, &**arg) {
                    return self.declare_ring(items);
                }
                let arg = self.eval(arg)?;
                self.apply(f, arg)?
            }
            Expr::Subscript(a, i) => {
                let a = self.eval(a)?;
                match (a, &**i) {
                    (Val::Int(k), Expr::Ident(_)) => Val::Poly(Polynomial::integer(self.table()?, k)),
                    (Val::Mat(m), i) => {
                        let j = index(&self.eval(i)?)?;
                        if j >= m.cols() {
                            return Err(format!("column {j} out of range"));
                        }
                        Val::Vector(m.column(j))
                    }
                    (Val::Vector(v), i) => {
                        let j = index(&self.eval(i)?)?;
                        Val::Poly(v.get(j).cloned().ok_or_else(|| format!("entry {j} out of range"))?)
                    }
                    (other, _) => return Err(format!("cannot subscript {other:?}")),
                }
            }
            Expr::Tuple(items) => Val::Tuple(items.iter().map(|x| self.eval(x)).collect::<R<_>>()?),
            Expr::Block(items) => {
                let mut last = Val::Tuple(Vec::new());
                for x in items {
                    last = self.eval(x)?;
                }
                last
            }
            Expr::List(items) | Expr::Bracket(items) => {
                let mut out = Vec::new();
                for x in items {
                    match x {
                        Expr::Repeat(k, v) => {
                            let k = index(&self.eval(k)?)?;
                            let v = self.eval(v)?;
                            out.extend(std::iter::repeat_n(v, k));
                        }
                        x => out.push(self.eval(x)?),
                    }
                }
                Val::List(out)
            }
            Expr::Repeat(..) => return Err("`:` outside a list".into()),
            Expr::Opt(k, v) => Val::Opt(Box::new(self.eval(k)?), Box::new(self.eval(v)?)),
            Expr::Lambda(f) => Val::Func(f.clone()),
            Expr::Assign(name, rhs, local) => {
                let v = self.eval(rhs)?;
                match (local, self.frames.last_mut()) {
                    (true, Some(frame)) => frame.insert(name.clone(), v.clone()),
                    _ => self.globals.insert(name.clone(), v.clone()),
                };
                v
            }
        })
    }

    fn declare_ring(&mut self, items: &[Expr]) -> R<Val> {
        let mut names = Vec::new();
        let mut degrees = None;
        for item in items {
            match item {
                Expr::Ident(s) => names.push(s.clone()),
                Expr::Opt(k, v) if matches!(&**k, Expr::Ident(s) if s == "Degrees") => {
                    let Val::List(ds) = self.eval(v)? else { return Err("Degrees must be a list".into()) };
                    degrees = Some(ds.iter().map(|d| index(d).map(|d| d as u32)).collect::<R<Vec<_>>>()?);
                }
                other => return Err(format!("unsupported ring item {other:?}")),
            }
        }
        if let Some(d) = &degrees {
            if d.len() != names.len() {
                return Err(format!("{} degrees for {} variables", d.len(), names.len()));
            }
        }
        let table = Arc::new(VariableTable::new(names).map_err(|e| e.to_string())?);
        Ok(Val::Ring(table, degrees))
    }

    fn binary(&self, op: &str, a: Val, b: Val) -> R<Val> {
        let err = |e: unproj_core::Error| e.to_string();
        Ok(match (op, a, b) {
            ("+", Val::Int(x), Val::Int(y)) => Val::Int(x + y),
            ("-", Val::Int(x), Val::Int(y)) => Val::Int(x - y),
            ("*", Val::Int(x), Val::Int(y)) => Val::Int(x * y),
            ("||", Val::Mat(x), Val::Mat(y)) => {
                let rows = (0..x.rows()).map(|i| x.row(i)).chain((0..y.rows()).map(|i| y.row(i))).collect();
                Val::Mat(PolyMatrix::from_rows(self.table()?, rows).map_err(err)?)
            }
            ("|", Val::Mat(x), Val::Mat(y)) => {
                let rows = (0..x.rows()).map(|i| [x.row(i), y.row(i)].concat()).collect();
                Val::Mat(PolyMatrix::from_rows(self.table()?, rows).map_err(err)?)
            }
            ("*", Val::Mat(x), Val::Mat(y)) => Val::Mat(x.try_mul(&y).map_err(err)?),
            ("+", Val::Mat(x), Val::Mat(y)) => Val::Mat(x.try_add(&y).map_err(err)?),
            ("-", Val::Mat(x), Val::Mat(y)) => Val::Mat(x.try_sub(&y).map_err(err)?),
            ("*", Val::Mat(m), s) | ("*", s, Val::Mat(m)) => Val::Mat(m.scale(&self.poly(s)?)),
            (op @ ("+" | "-"), Val::Mat(m), s) if m.is_square() => {
                let shift = PolyMatrix::identity(self.table()?, m.rows()).scale(&self.poly(s)?);
                Val::Mat(if op == "+" { m.try_add(&shift) } else { m.try_sub(&shift) }.map_err(err)?)
            }
            (op @ ("+" | "-"), s, Val::Mat(m)) if m.is_square() => {
                let shift = PolyMatrix::identity(self.table()?, m.rows()).scale(&self.poly(s)?);
                Val::Mat(if op == "+" { shift.try_add(&m) } else { shift.try_sub(&m) }.map_err(err)?)
            }
            ("^", base, Val::Int(k)) if k >= 0 => Val::Poly(self.poly(base)?.pow(k as u32)),
            ("/", a, b) => {
                let d = self.poly(b)?;
                if d.is_zero() {
                    return Err("division by zero".into());
                }
                let d = d.as_constant().ok_or("division by a non-constant")?;
                Val::Poly(self.poly(a)?.scale(&d.recip()))
            }
            (op, a, b) => {
                let (a, b) = (self.poly(a)?, self.poly(b)?);
                Val::Poly(match op {
                    "+" => a + b,
                    "-" => a - b,
                    "*" => a * b,
                    other => return Err(format!("unsupported operator `{other}`")),
                })
            }
        })
    }

    fn args(arg: Val) -> Vec<Val> {
        match arg {
            Val::Tuple(v) => v,
            other => vec![other],
        }
    }

    fn indices(v: &Val) -> R<Vec<usize>> {
        match v {
            Val::List(items) => items.iter().map(index).collect(),
            other => Err(format!("expected an index list, got {other:?}")),
        }
    }

    fn apply(&mut self, f: Val, arg: Val) -> R<Val> {
        match f {
            Val::Func(def) => {
                let (params, body) = &*def;
                let args = Self::args(arg);
                if args.len() != params.len() {
                    return Err(format!("expected {} arguments, got {}", params.len(), args.len()));
                }
                self.frames.push(params.iter().cloned().zip(args).collect());
                let out = self.eval(body);
                self.frames.pop();
                out
            }
            Val::Builtin(name) => self.builtin(name, Self::args(arg)),
            other => Err(format!("{other:?} is not a function")),
        }
    }

    fn builtin(&mut self, name: &str, mut args: Vec<Val>) -> R<Val> {
        let err = |e: unproj_core::Error| e.to_string();
        Ok(match (name, args.len()) {
            ("matrix", 1) => match args.pop() {
                Some(Val::List(rows)) => Val::Mat(self.matrix(rows)?),
                other => return Err(format!("matrix expects a list of rows, got {other:?}")),
            },
            ("transpose", 1) => match args.pop() {
                Some(Val::Mat(m)) => Val::Mat(m.transpose()),
                other => return Err(format!("cannot transpose {other:?}")),
            },
            ("det", 1) => match args.pop() {
                Some(Val::Mat(m)) => Val::Poly(m.det().map_err(err)?),
                other => return Err(format!("det expects a matrix, got {other:?}")),
            },
            ("submatrix", 3) => {
                let cols = Self::indices(&args[2])?;
                let rows = Self::indices(&args[1])?;
                match &args[0] {
                    Val::Mat(m) => Val::Mat(m.submatrix(&rows, &cols)),
                    other => return Err(format!("submatrix expects a matrix, got {other:?}")),
                }
            }
            ("ideal", _) => Val::Ideal(args.into_iter().map(|a| self.poly(a)).collect::<R<_>>()?),
            ("substitute", 2) => match (&args[0], &args[1]) {
                (v, Val::Ring(..)) => v.clone(),
                (Val::Ideal(gens), Val::List(rules)) => {
                    let t = self.table()?.clone();
                    let mut assign = Vec::new();
                    for rule in rules {
                        let Val::Opt(k, v) = rule else { return Err(format!("bad substitution rule {rule:?}")) };
                        let var = match &**k {
                            Val::Poly(p) if p.len() == 1 && p.variables().len() == 1 && p.total_degree() == Some(1) => {
                                p.variables()[0]
                            }
                            other => return Err(format!("rule key {other:?} is not a variable")),
                        };
                        assign.push((var, self.poly((**v).clone())?));
                    }
                    let spec = SubstitutionSpec::new(&t, &t, assign).map_err(err)?;
                    Val::Ideal(gens.iter().map(|g| substitute(g, &spec)).collect::<Result<_, _>>().map_err(err)?)
                }
                other => return Err(format!("unsupported substitute arguments {other:?}")),
            },
            ("sub", 2) => match (&args[0], &args[1]) {
                (Val::Ideal(gens), Val::Ring(target, _)) => {
                    let moved = gens
                        .iter()
                        .map(|g| parse_polynomial(target, &g.to_string()))
                        .collect::<Result<_, _>>()
                        .map_err(err)?;
                    Val::Ideal(moved)
                }
                other => return Err(format!("unsupported sub arguments {other:?}")),
            },
            (name, k) => return Err(format!("unsupported call {name} with {k} arguments")),
        })
    }
}
