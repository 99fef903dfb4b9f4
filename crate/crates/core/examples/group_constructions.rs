//! Hypergroups derived from finite groups, and direct products.

use hypergroup::constructions::{
    class_hypergroup, cyclic_group, dihedral_group, dihedral_reflection_subgroup, direct_product,
    double_coset, group_hypergroup, quaternion_group,
};

fn main() -> hypergroup::Result<()> {
    let d5 = dihedral_group(5);
    let classes = class_hypergroup(&d5)?;
    println!("class(D5): order {}, haar {:?}", classes.order(), classes.haar());
    let dc = double_coset(&d5, &dihedral_reflection_subgroup(5))?;
    println!("D5//⟨s⟩: order {}, haar {:?}, commutative {}", dc.order(), dc.haar(), dc.is_commutative());
    let q8 = class_hypergroup(&quaternion_group())?;
    println!("class(Q8): haar {:?}", q8.haar());
    let prod = direct_product(&classes, &group_hypergroup(&cyclic_group(2))?)?;
    println!("{}: order {}, total mass {}", prod.name(), prod.order(), prod.total_mass());
    Ok(())
}
