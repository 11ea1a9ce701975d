package fixtures.calypso;

import java.util.HashMap;
import java.util.Map;

public class ImageCache {
    private Map<String, byte[]> images = new HashMap<String, byte[]>();
    private long hitCount;
    private long missCount;

    public byte[] loadImage(String key) {
        byte[] image = images.get(key);
        if (image == null) {
            missCount = missCount + 1;
        } else {
            hitCount = hitCount + 1;
        }
        return image;
    }

    public void storeImage(String key, byte[] image) {
        images.put(key, image);
    }

    public void evictImage(String key) {
        images.remove(key);
    }

    public long countHits() {
        long hits = hitCount;
        return hits;
    }

    public double hitRatio() {
        double ratio = hitCount / (double) (hitCount + missCount);
        return ratio;
    }
}
