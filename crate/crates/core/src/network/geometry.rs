use std::cmp::Ordering;

use num_traits::Zero;

use super::{Edge, Vertex};
use crate::exact::Rat;

pub(crate) struct Segment<'a> {
    a: (&'a Rat, &'a Rat),
    b: (&'a Rat, &'a Rat),
}

impl<'a> Segment<'a> {
    pub(crate) fn new(a: &'a Vertex, b: &'a Vertex) -> Self {
        Segment {
            a: (&a.x, &a.y),
            b: (&b.x, &b.y),
        }
    }

    /// Whether `v` lies on the segment but is not one of its endpoints.
    pub(crate) fn contains_strictly(&self, v: &Vertex) -> bool {
        let p = (&v.x, &v.y);
        p != self.a && p != self.b && on_segment(self.a, self.b, p)
    }
}

type Point<'a> = (&'a Rat, &'a Rat);

fn orient(p: Point, q: Point, r: Point) -> Ordering {
    let cross = (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0);
    cross.cmp(&Rat::zero())
}

fn within(a: &Rat, b: &Rat, c: &Rat) -> bool {
    (a.min(b) <= c) && (c <= a.max(b))
}

fn on_segment(p: Point, q: Point, r: Point) -> bool {
    orient(p, q, r) == Ordering::Equal && within(p.0, q.0, r.0) && within(p.1, q.1, r.1)
}

fn intersect(s: &Segment, t: &Segment) -> bool {
    let (p1, p2, q1, q2) = (s.a, s.b, t.a, t.b);
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    if d1 != d2
        && d3 != d4
        && d1 != Ordering::Equal
        && d2 != Ordering::Equal
        && d3 != Ordering::Equal
        && d4 != Ordering::Equal
    {
        return true;
    }
    on_segment(q1, q2, p1) || on_segment(q1, q2, p2) || on_segment(p1, p2, q1) || on_segment(p1, p2, q2)
}

/// Two edges conflict when their segments meet anywhere other than at a
/// single shared endpoint.
pub(crate) fn segments_conflict(s: &Segment, e: &Edge, t: &Segment, f: &Edge) -> bool {
    let shared: Vec<usize> = [e.from, e.to]
        .into_iter()
        .filter(|v| *v == f.from || *v == f.to)
        .collect();
    match shared.len() {
        0 => intersect(s, t),
        1 => {
            // they touch at the shared vertex; any further contact is a
            // collinear overlap
            let (e_other, f_other) = (other_end(s, e, shared[0]), other_end(t, f, shared[0]));
            let pivot = shared_point(s, e, shared[0]);
            orient(pivot, e_other, f_other) == Ordering::Equal && (e_other.0 > pivot.0) == (f_other.0 > pivot.0)
        }
        _ => true,
    }
}

fn other_end<'a>(s: &Segment<'a>, e: &Edge, shared: usize) -> Point<'a> {
    if e.from == shared {
        s.b
    } else {
        s.a
    }
}

fn shared_point<'a>(s: &Segment<'a>, e: &Edge, shared: usize) -> Point<'a> {
    if e.from == shared {
        s.a
    } else {
        s.b
    }
}
