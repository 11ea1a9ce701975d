package fixtures.boreas;

import java.util.HashMap;
import java.util.Map;

public class RouteTable {
    private Map<String, String> routes = new HashMap<String, String>();
    private String defaultGateway;

    public void addRoute(String prefix, String gateway) {
        routes.put(prefix, gateway);
    }

    public String lookupGateway(String prefix) {
        String lookup = routes.get(prefix);
        String gateway = lookup == null ? defaultGateway : lookup;
        return gateway;
    }

    public void dropRoute(String prefix) {
        routes.remove(prefix);
    }

    public int countRoutes() {
        int count = routes.size();
        return count;
    }

    public void setDefaultGateway(String gateway) {
        defaultGateway = gateway;
    }
}
