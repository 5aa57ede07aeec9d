static MktFactorTable mkt_factors;
static double risk_weight = 1.0;

double price_vanilla_option(OptionSpec *option_spec, double spot_price) {
    double forward_price = spot_price;
    return forward_price;
}

void register_with_volatility_spread(VolSurface *vol_surface) {
    double spread_basis = 0.0;
}
