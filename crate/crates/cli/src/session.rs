//! Session files: a ring declaration followed by named bindings.
//!
//! ```text
//! # comments start with '#'
//! ring x,y,z,w params t0,t1
//! I = x*z - y^2, x*w - y*z, y*w - z^2
//! f = t1*(z^2 - y*w)*dx
//!     + t0*(y^2 - x*z)*dw      # indented lines continue a binding
//! ```

use std::collections::BTreeMap;
use std::fs;

use syzdist::forms::TwistedOneForm;
use syzdist::groebner::Ideal;
use syzdist::poly::{parse_ideal, parse_ring, RingRef};

use crate::{CliError, CliResult};

/// A bound value: an ideal or a (possibly parametrized) 1-form, both in the
/// session ring.
#[derive(Debug, Clone)]
pub enum Binding {
    Ideal(Ideal),
    Form(TwistedOneForm),
}

#[derive(Debug, Clone, Default)]
pub struct Session {
    pub ring: Option<RingRef>,
    pub bindings: BTreeMap<String, (String, Binding)>,
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

impl Session {
    pub fn new(ring: Option<RingRef>) -> Self {
        Session {
            ring,
            bindings: BTreeMap::new(),
        }
    }

    pub fn load(path: &str, ring_override: Option<RingRef>) -> CliResult<Session> {
        let text =
            fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read session file {path}: {e}")))?;
        Session::parse(&text, ring_override).map_err(|e| match e {
            CliError::Usage(m) => CliError::Usage(format!("{path}: {m}")),
            other => other,
        })
    }

    pub fn parse(text: &str, ring_override: Option<RingRef>) -> CliResult<Session> {
        let mut session = Session::new(ring_override);
        let mut entries: Vec<(usize, String, String)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = strip_comment(raw);
            if line.trim().is_empty() {
                continue;
            }
            let continued = line.starts_with(' ') || line.starts_with('\t');
            if continued {
                match entries.last_mut() {
                    Some((_, _, body)) => {
                        body.push('\n');
                        body.push_str(line);
                    }
                    None => {
                        return Err(CliError::Usage(format!(
                            "line {}: continuation line without a binding",
                            lineno + 1
                        )))
                    }
                }
                continue;
            }
            let trimmed = line.trim();
            if trimmed.starts_with("ring ") {
                if session.ring.is_none() {
                    session.ring =
                        Some(parse_ring(trimmed).map_err(|e| CliError::Usage(format!("line {}: {e}", lineno + 1)))?);
                }
                continue;
            }
            let Some((name, body)) = trimmed.split_once('=') else {
                return Err(CliError::Usage(format!(
                    "line {}: expected `ring ...` or `name = value`",
                    lineno + 1
                )));
            };
            let name = name.trim();
            if !is_name(name) {
                return Err(CliError::Usage(format!(
                    "line {}: invalid binding name `{name}`",
                    lineno + 1
                )));
            }
            entries.push((lineno + 1, name.to_string(), body.to_string()));
        }
        for (lineno, name, body) in entries {
            let ring = session.require_ring()?;
            let binding = interpret(&body, &ring)
                .map_err(|e| CliError::Usage(format!("binding `{name}` (line {lineno}): {e}")))?;
            if session.bindings.insert(name.clone(), (body, binding)).is_some() {
                return Err(CliError::Usage(format!("binding `{name}` defined twice")));
            }
        }
        Ok(session)
    }

    pub fn require_ring(&self) -> CliResult<RingRef> {
        self.ring
            .clone()
            .ok_or_else(|| CliError::Usage("no ring declared: pass --ring or a session file with a `ring` line".into()))
    }

    /// Source text of an argument: `@name` is a session binding or, failing
    /// that, a file path; anything else is literal text.
    pub fn source(&self, arg: &str) -> CliResult<String> {
        let Some(name) = arg.strip_prefix('@') else {
            return Ok(arg.to_string());
        };
        if let Some((text, _)) = self.bindings.get(name) {
            return Ok(text.clone());
        }
        fs::read_to_string(name)
            .map_err(|_| CliError::Usage(format!("`@{name}` is neither a session binding nor a readable file")))
    }

    pub fn ideal(&self, arg: &str) -> CliResult<Ideal> {
        if let Some((_, Binding::Ideal(i))) = arg.strip_prefix('@').and_then(|n| self.bindings.get(n)) {
            return Ok(i.clone());
        }
        let ring = self.require_ring()?;
        let src = self.source(arg)?;
        let gens = parse_ideal(&src, &ring).map_err(|e| CliError::Usage(e.to_string()))?;
        Ideal::new(&ring, gens).map_err(|e| CliError::Usage(e.to_string()))
    }

    pub fn form(&self, arg: &str) -> CliResult<TwistedOneForm> {
        if let Some((_, Binding::Form(f))) = arg.strip_prefix('@').and_then(|n| self.bindings.get(n)) {
            return Ok(f.clone());
        }
        let ring = self.require_ring()?;
        let src = self.source(arg)?;
        TwistedOneForm::parse(&src, &ring).map_err(|e| CliError::Usage(e.to_string()))
    }
}

/// A form if the text mentions a differential, an ideal otherwise.
fn interpret(body: &str, ring: &RingRef) -> Result<Binding, String> {
    let mentions_differential = ring.vars().iter().any(|v| body.contains(&format!("d{v}")));
    if mentions_differential {
        return TwistedOneForm::parse(body, ring)
            .map(Binding::Form)
            .map_err(|e| e.to_string());
    }
    let gens = parse_ideal(body, ring).map_err(|e| e.to_string())?;
    Ideal::new(ring, gens).map(Binding::Ideal).map_err(|e| e.to_string())
}
