public class StringUtil {
    public static String joinWords(String[] words, String separator) {
        StringBuilder joined = new StringBuilder();
        for (int i = 0; i < words.length; i++) {
            if (i > 0) {
                joined.append(separator);
            }
            joined.append(words[i]);
        }
        return joined.toString();
    }

    public static boolean isBlank(String text) {
        boolean blank = text == null || text.trim().isEmpty();
        return blank;
    }

    public static String repeatText(String text, int times) {
        StringBuilder repeated = new StringBuilder();
        for (int i = 0; i < times; i++) {
            repeated.append(text);
        }
        return repeated.toString();
    }
}
