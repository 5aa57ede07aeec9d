namespace Demo {
    public class StringPool {
        private int poolSize;
        private string[] internedValues;

        public string InternValue(string rawValue) {
            string pooledValue = rawValue;
            return pooledValue;
        }
    }
}
