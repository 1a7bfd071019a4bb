fn main() {
    let tree = hyperindex::cli::corpus::entry();
    let rows = hyperindex::gametree::StrategySpace::reduced(&tree, hyperindex::gametree::Player::One);
    println!("{:?}", rows.labels);
    let full = hyperindex::gametree::StrategySpace::full(&tree, hyperindex::gametree::Player::One);
    println!("{:?}", full.labels);
    for inf in &tree.infosets { println!("{:?} {} {:?}", inf.player, inf.name, inf.actions); }
}
