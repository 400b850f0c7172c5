//! Compute Jones polynomials through the Kauffman bracket and check the
//! mirror law V_mirror(q) = V(q⁻¹) on a few diagrams.

use facesum::braid;
use facesum::diagram::Diagram;
use facesum::jones;

fn main() {
    let sigma15: Vec<i32> = vec![1; 5];
    let knots: Vec<(&str, Diagram)> = vec![
        (
            "trefoil (left)",
            Diagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap(),
        ),
        (
            "figure-eight",
            Diagram::parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)")
                .unwrap(),
        ),
        ("5_1", braid::closure(2, &sigma15).unwrap()),
        ("unknot (+curl)", Diagram::parse_pd("X(1,1,2,2)").unwrap()),
    ];
    for (name, d) in knots {
        let v = jones::jones(&d).unwrap();
        let vm = jones::jones(&d.mirror()).unwrap();
        println!("{name}:");
        println!("  V        = {v}");
        println!("  V mirror = {vm}");
        assert_eq!(vm, v.invert_variable());
        println!(
            "  mirror law holds; Jones {} this knot from its mirror\n",
            if v == vm { "does NOT distinguish" } else { "distinguishes" }
        );
    }
}
