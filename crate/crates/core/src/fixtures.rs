//! Bundled example graphs and certificate, embedded at compile time.

use crate::cospectral::RationalMatrix;
use crate::graphio::{parse_adjacency, parse_graph6};
use crate::Graph;

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub contents: &'static str,
}

pub const ALL: &[Fixture] = &[
    Fixture {
        name: "example1",
        description: "12-vertex graph, theta = 3^3, certified only by the main condition",
        contents: include_str!("../fixtures/example1.txt"),
    },
    Fixture {
        name: "example1.g6",
        description: "example1 in graph6",
        contents: include_str!("../fixtures/example1.g6"),
    },
    Fixture {
        name: "example2",
        description: "10-vertex graph, theta = 3^3, improved condition applicable but fails",
        contents: include_str!("../fixtures/example2.txt"),
    },
    Fixture {
        name: "example2.g6",
        description: "example2 in graph6",
        contents: include_str!("../fixtures/example2.g6"),
    },
    Fixture {
        name: "example3",
        description: "14-vertex graph, theta = 3^8 * 5^2, not DGS",
        contents: include_str!("../fixtures/example3.txt"),
    },
    Fixture {
        name: "example3.g6",
        description: "example3 in graph6",
        contents: include_str!("../fixtures/example3.g6"),
    },
    Fixture {
        name: "example3_q",
        description: "level-3 regular orthogonal Q in Q(example3)",
        contents: include_str!("../fixtures/example3_q.txt"),
    },
    Fixture {
        name: "example3_q_misordered",
        description: "the example3 Q block on the wrong vertex rows; not a member",
        contents: include_str!("../fixtures/example3_q_misordered.txt"),
    },
];

pub fn get(name: &str) -> Option<&'static Fixture> {
    ALL.iter().find(|f| f.name == name)
}

fn graph(name: &str) -> Graph {
    let f = get(name).expect("bundled fixture");
    if name.ends_with(".g6") {
        parse_graph6(f.contents.trim()).expect("bundled graph6 fixture parses")
    } else {
        parse_adjacency(f.contents).expect("bundled matrix fixture parses")
    }
}

pub fn example1() -> Graph {
    graph("example1")
}

pub fn example2() -> Graph {
    graph("example2")
}

pub fn example3() -> Graph {
    graph("example3")
}

pub fn example3_q() -> RationalMatrix {
    RationalMatrix::parse(get("example3_q").expect("bundled").contents).expect("parses")
}

pub fn example3_q_misordered() -> RationalMatrix {
    RationalMatrix::parse(get("example3_q_misordered").expect("bundled").contents).expect("parses")
}
