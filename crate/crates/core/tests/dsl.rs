mod common;

use coh::cli::{run, Cli, EXIT_ERROR, EXIT_GOAL_FAILED, EXIT_OK};
use coh::diagram::Verdict;
use coh::dsl::ast::*;
use coh::dsl::{load_source, parse_source, print_source, Span};
use coh::free::Flavor;
use clap::Parser;
use common::*;
use proptest::prelude::*;
use serde_json::Value;

fn name(s: String) -> Name {
    Name::new(&s)
}

fn arb_gen() -> impl Strategy<Value = Name> {
    (0..4u8).prop_map(|i| name(format!("g{i}")))
}

fn arb_names(max: usize) -> impl Strategy<Value = Vec<Name>> {
    prop::collection::vec(arb_gen(), 0..=max)
}

fn arb_obj() -> impl Strategy<Value = ObjExpr> {
    let atom = prop_oneof![
        arb_names(3).prop_map(ObjAtom::Free),
        arb_names(3).prop_map(ObjAtom::Phi),
    ];
    prop::collection::vec(atom, 1..=3).prop_map(|atoms| ObjExpr {
        atoms,
        span: Span::default(),
    })
}

fn arb_word_text() -> impl Strategy<Value = String> {
    prop::collection::vec((1..5usize, any::<bool>()), 0..4).prop_map(|v| {
        v.iter()
            .map(|(i, p)| if *p { format!("s{i}") } else { format!("s{i}^-1") })
            .collect::<Vec<_>>()
            .join(" ")
    })
}

fn arb_blocks(min: usize) -> impl Strategy<Value = Vec<Block>> {
    prop::collection::vec(arb_names(3), min..=3)
}

fn mor(kind: MorKind) -> MorExpr {
    MorExpr {
        kind,
        span: Span::default(),
    }
}

fn arb_leaf() -> impl Strategy<Value = MorExpr> {
    prop_oneof![
        prop::option::of(arb_obj()).prop_map(|o| mor(MorKind::Id(o))),
        (arb_word_text(), prop::option::of(arb_obj())).prop_map(|(text, at)| mor(MorKind::Word { text, at })),
        (prop::collection::vec(1..6u64, 0..4), prop::option::of(arb_obj()))
            .prop_map(|(image, at)| mor(MorKind::Perm { image, at })),
        (any::<bool>(), arb_blocks(0)).prop_map(|(inverse, blocks)| mor(MorKind::Q { inverse, blocks })),
        (arb_obj(), arb_obj()).prop_map(|(x, y)| mor(MorKind::Braid(x, y))),
    ]
}

fn arb_mor() -> impl Strategy<Value = MorExpr> {
    arb_leaf().prop_recursive(3, 24, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..=3).prop_map(|v| mor(MorKind::Compose(v))),
            prop::collection::vec(inner.clone(), 2..=3).prop_map(|v| mor(MorKind::Tensor(v))),
            (
                prop::option::of(arb_blocks(1)),
                prop::option::of(inner.clone()),
                prop::option::of(prop::collection::vec(inner, 1..=2)),
            )
                .prop_map(|(on, outer, inner)| mor(MorKind::Pf {
                    on,
                    outer: outer.map(Box::new),
                    inner,
                })),
        ]
    })
}

fn decl(kind: DeclKind) -> Decl {
    Decl {
        kind,
        span: Span::default(),
    }
}

/// A file whose names all resolve.
fn arb_file() -> impl Strategy<Value = SourceFile> {
    let flavor = prop_oneof![Just(Flavor::Monoidal), Just(Flavor::Symmetric), Just(Flavor::Braided)];
    let builtin = prop_oneof![
        Just(BuiltinName::Identity),
        Just(BuiltinName::Doubling),
        Just(BuiltinName::Quadrupling),
        (2..5u64).prop_map(BuiltinName::NFold),
    ];
    (
        flavor,
        prop::collection::vec(arb_obj(), 1..4),
        prop::collection::vec((any::<prop::sample::Index>(), any::<prop::sample::Index>(), arb_mor()), 0..4),
        builtin,
        any::<bool>(),
        prop::collection::vec(any::<prop::sample::Index>(), 0..3),
    )
        .prop_map(|(flavor, nodes, edges, builtin, twice, goal_edges)| {
            let mut decls = vec![
                decl(DeclKind::Flavor(flavor)),
                decl(DeclKind::Gens {
                    name: name("G".into()),
                    members: (0..4).map(|i| name(format!("g{i}"))).collect(),
                }),
                decl(DeclKind::Gens {
                    name: name("H".into()),
                    members: vec![name("h0".into()), name("h1".into())],
                }),
                decl(DeclKind::Map {
                    name: name("m".into()),
                    source: name("G".into()),
                    target: name("H".into()),
                    pairs: (0..4).map(|i| (name(format!("g{i}")), name(format!("h{}", i % 2)))).collect(),
                }),
            ];
            for (i, obj) in nodes.iter().enumerate() {
                decls.push(decl(DeclKind::Node {
                    name: name(format!("n{i}")),
                    obj: obj.clone(),
                }));
            }
            for (i, (s, t, m)) in edges.iter().enumerate() {
                decls.push(decl(DeclKind::Edge {
                    name: name(format!("e{i}")),
                    source: name(format!("n{}", s.index(nodes.len()))),
                    target: name(format!("n{}", t.index(nodes.len()))),
                    mor: m.clone(),
                }));
            }
            decls.push(decl(DeclKind::Functor {
                name: name("F".into()),
                def: FunctorExpr::Builtin {
                    kind: builtin,
                    on: name("G".into()),
                },
            }));
            if twice {
                decls.push(decl(DeclKind::Functor {
                    name: name("K".into()),
                    def: FunctorExpr::Compose(name("F".into()), name("F".into())),
                }));
            }
            decls.push(decl(DeclKind::Interp {
                letter: name("h1".into()),
                image: vec![name("g1".into()), name("g1".into())],
            }));
            let lhs = if edges.is_empty() {
                PathExpr::Identity(name("n0".into()))
            } else {
                PathExpr::Edges(goal_edges.iter().map(|ix| name(format!("e{}", ix.index(edges.len())))).collect())
            };
            let lhs = match lhs {
                PathExpr::Edges(v) if v.is_empty() => PathExpr::Identity(name("n0".into())),
                other => other,
            };
            decls.push(decl(DeclKind::Goal {
                name: name("goal".into()),
                lhs,
                rhs: PathExpr::Identity(name("n0".into())),
            }));
            SourceFile { decls }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn printing_then_parsing_is_the_identity(file in arb_file()) {
        let text = print_source(&file);
        let back = parse_source(&text).map_err(|d| TestCaseError::fail(format!("{d}\n{text}")))?;
        prop_assert_eq!(&back, &file, "{}", text);
        prop_assert_eq!(print_source(&back), text);
    }

    #[test]
    fn arbitrary_text_never_panics(text in "[ -~\n]{0,200}") {
        let _ = parse_source(&text);
        let _ = load_source(&text, None);
    }

    #[test]
    fn token_soup_never_panics(parts in prop::collection::vec(prop::sample::select(vec![
        "flavor", "braided", "symmetric", "gens", "map", "node", "edge", "goal", "functor", "interp",
        "A", "a", "fa", "phi", "q", "pf", "id", "braid", "perm", "on", "outer", "inner", "doubling",
        "identity", "compose", "=", "==", ":", "->", "{", "}", "[", "]", "(", ")", ",", ";", ".", "|",
        "^", "-1", "@", "\"s1 s2\"", "\"s9\"", "\n", "1", "2", "3", "#",
    ]), 0..60)) {
        let text = parts.join(" ");
        let _ = parse_source(&text);
        let _ = load_source(&text, None);
        let _ = load_source(&text, Some(Flavor::Symmetric));
    }

    #[test]
    fn damaged_fixtures_never_panic(which in 0..FIXTURES.len(), cut in any::<prop::sample::Index>(), junk in "[ -~]{0,4}") {
        let text = fixture(FIXTURES[which]);
        let mut at = cut.index(text.len() + 1);
        while !text.is_char_boundary(at) {
            at -= 1;
        }
        let damaged = format!("{}{junk}{}", &text[..at], &text[at..]);
        let _ = load_source(&damaged, None);
        let truncated = &text[..at];
        let _ = load_source(truncated, Some(Flavor::Braided));
    }
}

#[test]
fn mystery_one_has_the_expected_shape() {
    let file = parse_source(&fixture("mystery1.coh")).unwrap();
    assert_eq!(file.nodes().count(), 6);
    assert_eq!(file.edges().count(), 6);
    assert_eq!(file.goals().count(), 1);
    let d = load_source(&fixture("mystery1.coh"), None).unwrap();
    assert_eq!(d.nodes().len(), 6);
    assert_eq!(d.edges().len(), 6);
    assert_eq!(d.goals().len(), 1);
    assert_eq!(d.flavor(), Flavor::Braided);
}

#[test]
fn every_fixture_loads_and_reprints() {
    for name in FIXTURES {
        let text = fixture(name);
        let file = parse_source(&text).unwrap();
        assert_eq!(parse_source(&print_source(&file)).unwrap(), file, "{name}");
        for flavor in [None, Some(Flavor::Symmetric), Some(Flavor::Braided)] {
            load_source(&text, flavor).unwrap_or_else(|d| panic!("{name} {flavor:?}: {d}"));
        }
    }
}

#[test]
fn errors_carry_positions() {
    let text = "flavor braided\ngens A = { a }\nnode x = [a]\nedge e : x -> y = id\n";
    let d = parse_source(text).unwrap_err();
    assert_eq!((d.span.line, d.span.col), (4, 15));
    assert!(d.message.contains("unresolved node `y`"));
    let d = load_source("flavor braided\ngens A = { a }\nnode x = [a]\nedge e : x -> x = \"s1\"\n", None).unwrap_err();
    assert_eq!(d.span.line, 4);
    let d = parse_source("flavor braided\nnode x = [a\n").unwrap_err();
    assert!(d.span.line >= 2);
}

fn schema() -> jsonschema::JSONSchema {
    let path = format!("{}/schema/verdict.schema.json", env!("CARGO_MANIFEST_DIR"));
    let raw: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&raw).unwrap()
}

fn fixture_path(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let parsed = Cli::try_parse_from(std::iter::once("coh").chain(args.iter().copied())).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&parsed, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn check_output_matches_the_schema() {
    let schema = schema();
    for name in FIXTURES {
        let path = fixture_path(name);
        for flavor in ["braided", "symmetric"] {
            let (code, out, err) = cli(&["check", &path, "--flavor", flavor]);
            assert_ne!(code, EXIT_ERROR, "{name}: {err}");
            let v: Value = serde_json::from_str(&out).unwrap();
            let msgs: Vec<String> = match schema.validate(&v) {
                Ok(()) => Vec::new(),
                Err(errors) => errors.map(|e| e.to_string()).collect(),
            };
            assert!(msgs.is_empty(), "{name} in {flavor}: {msgs:?}");
        }
    }
    let bad: Value = serde_json::json!([{"goal": "g", "verdict": "EQUAL", "left": {}, "right": {}, "projections": {}}]);
    assert!(!schema.is_valid(&bad));
}

#[test]
fn check_exit_codes() {
    let (code, out, _) = cli(&["check", &fixture_path("mystery1.coh")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("\"verdict\": \"equal\""));

    let (code, out, _) = cli(&["check", &fixture_path("cursed_cyclic.coh")]);
    assert_eq!(code, EXIT_GOAL_FAILED);
    assert!(out.contains("equal_in_s_only"));
    let (code, _, _) = cli(&["check", &fixture_path("cursed_cyclic.coh"), "--symmetric-ok"]);
    assert_eq!(code, EXIT_OK);
    let (code, _, _) = cli(&["check", &fixture_path("cursed_cyclic.coh"), "--flavor", "symmetric"]);
    assert_eq!(code, EXIT_OK);

    let (code, _, err) = cli(&["check", "/nonexistent/file.coh"]);
    assert_eq!(code, EXIT_ERROR);
    let e: Value = serde_json::from_str(err.trim()).unwrap();
    assert!(e["error"].as_str().unwrap().contains("cannot read"));
}

#[test]
fn parse_errors_are_json_on_stderr() {
    let dir = std::env::temp_dir().join(format!("coh-dsl-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.coh");
    std::fs::write(&path, "flavor braided\ngens A = { a }\nnode x = braid(\n").unwrap();
    let (code, out, err) = cli(&["check", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_ERROR);
    assert!(out.is_empty());
    let e: Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(e["line"], 3);
    assert!(e["col"].as_u64().unwrap() >= 1);
    assert!(e["file"].as_str().unwrap().ends_with("broken.coh"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_output_file_and_text_mode() {
    let dir = std::env::temp_dir().join(format!("coh-json-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("v.json");
    let (code, out, _) = cli(&[
        "check",
        &fixture_path("doubling_symmetry.coh"),
        "--json",
        out_path.to_str().unwrap(),
        "--text",
    ]);
    assert_eq!(code, EXIT_GOAL_FAILED);
    assert!(out.contains("braid_axiom"));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(written[0]["verdict"], "equal_in_s_only");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn all_pairs_checks_parallel_paths() {
    let (code, out, _) = cli(&["check", &fixture_path("mystery1.coh"), "--all-pairs"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 1);
    assert_eq!(arr[0]["verdict"], "equal");
    assert_eq!(code, EXIT_OK);
}

#[test]
fn braid_eq_dissolve_and_render() {
    let (code, out, _) = cli(&["braid-eq", "s3 s4 s2", "s3 s2 s4", "--strands", "6"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().last(), Some(Verdict::Equal.to_string().as_str()));
    let (code, out, _) = cli(&["braid-eq", "s1 s2 s1", "s2 s1 s1", "--strands", "3"]);
    assert_eq!(code, EXIT_GOAL_FAILED);
    assert!(out.ends_with("NOT_EQUAL\n"));
    let (code, out, _) = cli(&["braid-eq", "s1 s1", "", "--strands", "2"]);
    assert_eq!(code, EXIT_GOAL_FAILED);
    assert!(out.ends_with("EQUAL_IN_S_ONLY\n"));
    let (code, _, err) = cli(&["braid-eq", "s7", "", "--strands", "3"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("error"));

    let (code, out, _) = cli(&["dissolve", &fixture_path("mystery1.coh")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 6);
    assert!(out.contains("beta : [fa, fa, fa] -> [fa, fa, fa] = \"s1 s2\"\n"));

    let (code, out, _) = cli(&["render", &fixture_path("mystery1.coh"), "--edge", "beta"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 4);
    let (code, _, _) = cli(&["render", &fixture_path("mystery1.coh"), "--edge", "nope"]);
    assert_eq!(code, EXIT_ERROR);
}
